#include <stdexcept>
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "starsys/constructions.hpp"

using namespace starsys;

namespace {

const colour_class& find_class(const coloured_star_system& c, const std::string& label) {
  for (const auto& k : c.classes)
    if (k.label == label) return k;
  FAIL("no class " << label);
  return c.classes.front();
}

bool class_has(const coloured_star_system& c, const std::string& label, const star& s) {
  const auto& k = find_class(c, label);
  return std::any_of(k.members.begin(), k.members.end(),
                     [&](std::size_t m) { return c.system.blocks[m] == s; });
}

// Colour count expected for order n, written out independently of the
// dispatcher: n - 1 for n = 0, 2e+1 (t >= 1) mod 4e and for e = 3 orders
// 3, 9, 10 mod 12; n for 1 and 2e (t >= 1) mod 4e, for 2e+1 at t = 0 and
// for 4 mod 12.
long long expected_classes(int n, int e) {
  const int r = n % (4 * e);
  if (r == 0) return n - 1;
  if (r == 1) return n;
  if (r == 2 * e) return n == 2 * e ? n - 1 : n;
  if (r == 2 * e + 1) return n == 2 * e + 1 ? n : n - 1;
  const int q = n % 12;
  return q == 4 ? n : n - 1;
}

}  // namespace

TEST_CASE("base systems") {
  for (int e = 3; e <= 9; ++e) {
    const auto b = base_system_2e(e);
    CHECK(b.system.n == 2 * e);
    CHECK(b.system.blocks.size() == static_cast<std::size_t>(2 * e - 1));
    CHECK(verify_colouring(b).valid);
    CHECK(b.system.blocks[0] == star(1, [&] {
            std::vector<vertex> p{2 * e};
            for (int d = 2; d <= e; ++d) p.push_back(d);
            return p;
          }()));
  }
  CHECK(base_s3_6().system.blocks == fixtures::s3_6().blocks);
  const auto nine = base_s3_9();
  CHECK(nine.system.blocks == fixtures::s3_9_eight().blocks);
  REQUIRE(nine.classes.size() == 8);
  for (std::size_t k = 0; k < 8; ++k)
    CHECK(nine.classes[k].members == fixtures::s3_9_eight_coloured().classes[k].members);
  CHECK(verify_colouring(nine).valid);
  CHECK_THROWS(base_system_2e(2));
}

TEST_CASE("cross-pair classes cover the bipartite edges") {
  for (int e = 3; e <= 6; ++e) {
    std::vector<vertex> a, b;
    for (int i = 1; i <= 2 * e; ++i) {
      a.push_back(i);
      b.push_back(100 + i);
    }
    const auto classes = cross_pair_classes(a, b, e);
    REQUIRE(classes.size() == static_cast<std::size_t>(2 * e));
    std::set<std::pair<int, int>> edges;
    for (const auto& cls : classes) {
      REQUIRE(cls.size() == 2);
      CHECK(vertex_disjoint(cls[0], cls[1]));
      for (const auto& s : cls) {
        CHECK(s.size() == e);
        CHECK(s.root <= 2 * e);
        for (vertex p : s.pendants) CHECK(edges.insert({s.root, p}).second);
      }
    }
    CHECK(edges.size() == static_cast<std::size_t>(4 * e * e));
  }
  const std::vector<vertex> a{1, 2, 3, 4, 5, 6}, b{7, 8, 9, 10, 11, 12};
  const auto c = cross_pair_classes(a, b, 3);
  CHECK(c[0][0] == star(1, {7, 8, 9}));
  CHECK(c[0][1] == star(2, {10, 11, 12}));
  CHECK(c[1][0] == star(1, {10, 11, 12}));
  CHECK(c[1][1] == star(2, {7, 8, 9}));
  CHECK(c[5][0] == star(5, {10, 11, 12}));
  CHECK(c[5][1] == star(6, {7, 8, 9}));
  CHECK_THROWS(cross_pair_classes(a, std::vector<vertex>{7, 8, 9}, 3));
  CHECK_THROWS(cross_pair_classes(a, a, 3));
}

TEST_CASE("6-9 cross-pair classes") {
  const std::vector<vertex> six{1, 2, 3, 4, 5, 6};
  const std::vector<vertex> nine{11, 12, 13, 14, 15, 16, 17, 18, 19};
  const auto c = cross_pair_classes_6_9(six, nine);
  REQUIRE(c.size() == 6);
  CHECK(c[0] == std::vector<star>{{1, {11, 12, 13}}, {2, {14, 15, 16}}, {3, {17, 18, 19}}});
  CHECK(c[1] == std::vector<star>{{1, {14, 15, 16}}, {2, {17, 18, 19}}, {3, {11, 12, 13}}});
  CHECK(c[2] == std::vector<star>{{1, {17, 18, 19}}, {2, {11, 12, 13}}, {3, {14, 15, 16}}});
  CHECK(c[3][0] == star(4, {11, 12, 13}));
  std::set<std::pair<int, int>> edges;
  for (const auto& cls : c) {
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) CHECK(vertex_disjoint(cls[i], cls[j]));
    for (const auto& s : cls)
      for (vertex p : s.pendants) CHECK(edges.insert({s.root, p}).second);
  }
  CHECK(edges.size() == 54);
  CHECK_THROWS(cross_pair_classes_6_9(nine, six));
}

TEST_CASE("order 24 with 23 colours") {
  const auto c = construct(24, 3);
  CHECK(verify_colouring(c).valid);
  CHECK(c.classes.size() == 23);
  const auto plan = plan_construction(24, 3);
  CHECK(plan.family == "even");
  CHECK(plan.t == 2);
  REQUIRE(plan.layout.groups.size() == 4);
  CHECK(plan.layout.groups[1] == std::vector<vertex>{7, 8, 9, 10, 11, 12});
  CHECK_FALSE(plan.layout.extension);

  // F_1 = {(V1,V2),(V3,V4)}
  CHECK(class_has(c, "C1_1", star(1, {7, 8, 9})));
  CHECK(class_has(c, "C1_1", star(2, {10, 11, 12})));
  CHECK(class_has(c, "C1_1", star(13, {19, 20, 21})));
  CHECK(class_has(c, "C1_2", star(1, {10, 11, 12})));
  CHECK(class_has(c, "C1_2", star(2, {7, 8, 9})));
  CHECK(class_has(c, "C1_3", star(3, {7, 8, 9})));
  // F_2 = {(V1,V3),(V2,V4)}
  CHECK(class_has(c, "C2_1", star(1, {13, 14, 15})));
  CHECK(class_has(c, "C2_1", star(7, {19, 20, 21})));
  // D^k holds the k-th block of every group
  const auto& d1 = find_class(c, "D1");
  CHECK(d1.members.size() == 4);
  CHECK(class_has(c, "D1", star(1, {3, 5, 6})));
  CHECK(class_has(c, "D1", star(19, {21, 23, 24})));
  CHECK(class_has(c, "D5", star(12, {9, 10, 11})));
}

TEST_CASE("odd families with an extra point") {
  SUBCASE("even-plus-point, n = 13") {
    const auto c = construct(13, 3);
    CHECK(c.classes.size() == 13);
    CHECK(class_has(c, "C1_1", star(13, {4, 5, 6})));
    CHECK(class_has(c, "C1_6", star(13, {1, 2, 3})));
    CHECK(class_has(c, "A1", star(13, {7, 8, 9})));
    CHECK(class_has(c, "A2", star(13, {10, 11, 12})));
  }
  SUBCASE("odd-with-nine-plus-point, n = 10") {
    const auto c = construct(10, 3);
    CHECK(c.classes.size() == 9);
    CHECK(class_has(c, "C1_1", star(10, {2, 4, 7})));
    CHECK(class_has(c, "C1_4", star(10, {1, 6, 8})));
    CHECK(class_has(c, "A3", star(10, {3, 5, 9})));
  }
  SUBCASE("even-with-nine-plus-point, n = 16") {
    const auto c = construct(16, 3);
    CHECK(c.classes.size() == 16);
    CHECK(class_has(c, "E1", star(16, {7, 8, 9})));
    CHECK(class_has(c, "E2", star(16, {10, 11, 12})));
    CHECK(class_has(c, "D1", star(16, {13, 14, 15})));
    CHECK(class_has(c, "C1_6", star(16, {1, 2, 3})));
    CHECK(class_has(c, "C1_1", star(16, {4, 5, 6})));
  }
}

TEST_CASE("small cases") {
  CHECK(construct(6, 3).classes.size() == 5);
  CHECK(construct(7, 3).classes.size() == 7);
  CHECK(construct(9, 3).classes.size() == 8);
  CHECK(construct(8, 4).classes.size() == 7);
  CHECK(construct(9, 4).classes.size() == 9);
  CHECK(construct(11, 5).classes.size() == 11);
  CHECK(same_block_set(construct(9, 3).system, fixtures::s3_9_eight()));
}

TEST_CASE("construction sweep for e = 3, 4, 5 up to n = 120") {
  int built = 0;
  for (int e = 3; e <= 5; ++e)
    for (int n = 2 * e; n <= 120; ++n) {
      if (!is_admissible(n, e)) {
        CHECK_FALSE(is_covered(n, e));
        continue;
      }
      const bool expect_covered = e != 5 || (n % 10 != 5 && n % 10 != 6);
      CAPTURE(n);
      CAPTURE(e);
      REQUIRE(is_covered(n, e) == expect_covered);
      if (!expect_covered) {
        try {
          construct(n, e);
          FAIL("built an unsupported order");
        } catch (const construction_error& ex) {
          CHECK(ex.reason() == construction_error::kind::unsupported_class);
        }
        continue;
      }
      const auto c = construct(n, e);
      const auto r = verify_colouring(c);
      CHECK_MESSAGE(r.valid, r.message);
      CHECK(c.system.n == n);
      CHECK(c.system.e == e);
      CHECK(static_cast<long long>(c.classes.size()) == expected_classes(n, e));
      CHECK(plan_construction(n, e).classes == expected_classes(n, e));
      ++built;
    }
  CHECK(built == 129);
}

TEST_CASE("construction errors") {
  try {
    construct(8, 3);
    FAIL("no error");
  } catch (const construction_error& ex) {
    CHECK(ex.reason() == construction_error::kind::inadmissible);
  }
  CHECK_THROWS_AS(construct(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_thm_3_1(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_thm_4_1(0), std::invalid_argument);
  CHECK_THROWS_AS(construct_thm_4_2(0), std::invalid_argument);
  CHECK_THROWS_AS(construct_thm_3_3(2, 1), std::invalid_argument);
}
