#include <stdexcept>
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "starsys/search.hpp"

using namespace starsys;

namespace {

std::set<std::vector<int>> key_set(const std::vector<star_system>& v) {
  std::set<std::vector<int>> out;
  for (const auto& s : v) out.insert(oracle::block_set_key(s));
  return out;
}

bool fixed_by(const star_system& s, const permutation& sigma) {
  return oracle::block_set_key(oracle::apply(s, sigma)) == oracle::block_set_key(s);
}

}  // namespace

TEST_CASE("compatibility graph") {
  const auto g9 = compatibility_graph(9, 3);
  CHECK(g9.graph.vertex_count() == 504);
  CHECK(compatibility_graph(6, 3).stars.size() == 60);

  const auto g = compatibility_graph(7, 3);
  REQUIRE(g.stars.size() == 140);
  CHECK(g.stars[0] == star(1, {2, 3, 4}));
  CHECK(g.stars[1] == star(1, {2, 3, 5}));
  CHECK(g.stars[2] == star(1, {2, 4, 5}));
  CHECK(g.stars[3] == star(1, {3, 4, 5}));
  CHECK(g.stars[20] == star(2, {1, 3, 4}));
  for (int i = 0; i < 140; ++i) {
    CHECK(g.index_of(g.stars[static_cast<std::size_t>(i)]) == i);
    CHECK_FALSE(g.graph.adjacent(i, i));
    for (int j = i + 1; j < 140; ++j) {
      const auto a = star_edges(g.stars[static_cast<std::size_t>(i)]);
      const auto b = star_edges(g.stars[static_cast<std::size_t>(j)]);
      const bool share = std::any_of(a.begin(), a.end(),
                                     [&](const edge& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
      CHECK(g.graph.adjacent(i, j) == !share);
      CHECK(g.graph.adjacent(j, i) == g.graph.adjacent(i, j));
    }
  }
  CHECK(g.index_of(star(7, {3, 1, 2})) == 6 * 20);
  CHECK_THROWS(g.index_of(star(1, {1, 2, 3})));
  CHECK_THROWS(g.index_of(star(1, {2, 3})));
  CHECK_THROWS(compatibility_graph(5, 3));
}

TEST_CASE("exhaustive enumeration matches the brute-force oracle") {
  for (int n : {6, 7}) {
    const auto expected = oracle::all_systems(n, 3);
    const auto got = collect_systems(n, 3);
    CAPTURE(n);
    CHECK(got.size() == expected.size());
    CHECK(key_set(got) == key_set(expected));
    CHECK(key_set(got).size() == got.size());
    for (const auto& s : got) CHECK(verify_system(s).valid);
  }
  // frozen from the oracle run
  CHECK(oracle::all_systems(6, 3).size() == 144);
  CHECK(collect_systems(7, 3).size() == 12720);
}

TEST_CASE("seeds permute the order but not the set") {
  search_options a, b;
  b.seed = 12345;
  const auto x = collect_systems(7, 3, a);
  const auto y = collect_systems(7, 3, b);
  CHECK(key_set(x) == key_set(y));
  CHECK(oracle::block_set_key(x.front()) != oracle::block_set_key(y.front()));
  CHECK(oracle::block_set_key(collect_systems(7, 3, b).front()) == oracle::block_set_key(y.front()));
}

TEST_CASE("threads give the same set") {
  search_options o;
  o.threads = 4;
  CHECK(key_set(collect_systems(7, 3, o)) == key_set(collect_systems(7, 3)));
  o.limit = 100;
  const auto some = collect_systems(7, 3, o);
  CHECK(some.size() == 100);
  CHECK(key_set(some).size() == 100);
}

TEST_CASE("relabelled systems stay in the exhaustive output") {
  const auto all = collect_systems(7, 3);
  const auto keys = key_set(all);
  std::mt19937_64 rng(7);
  std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
  for (int i = 0; i < 50; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(keys.count(oracle::block_set_key(oracle::apply(all[static_cast<std::size_t>(i * 97)], perm))) == 1);
  }
}

TEST_CASE("limited enumeration at order 9") {
  search_options o;
  o.limit = 100;
  const auto v = collect_systems(9, 3, o);
  CHECK(v.size() == 100);
  CHECK(key_set(v).size() == 100);
  for (const auto& s : v) {
    CHECK(s.blocks.size() == 12);
    CHECK(verify_system(s).valid);
  }
  CHECK_THROWS_AS(collect_systems(8, 3), std::invalid_argument);
}

TEST_CASE("sampling") {
  const auto s = sample_system(15, 3, 4);
  CHECK(s.blocks.size() == 35);
  CHECK(verify_system(s).valid);
  CHECK(oracle::block_set_key(sample_system(15, 3, 4)) == oracle::block_set_key(s));
  CHECK(oracle::block_set_key(sample_system(15, 3, 5)) != oracle::block_set_key(s));
  int lo = 100, hi = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto x = sample_system(10, 3, seed);
    REQUIRE(verify_system(x).valid);
    const int chi = chromatic_index(x).chi;
    lo = std::min(lo, chi);
    hi = std::max(hi, chi);
  }
  CHECK(lo >= 8);
  CHECK(hi <= 15);
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("(1,2,3)", 4) == permutation{2, 3, 1, 4});
  CHECK(parse_cycles("(1,2)(3,4)", 4) == permutation{2, 1, 4, 3});
  CHECK(parse_cycles(" ( 1 , 4 ) ", 4) == permutation{4, 2, 3, 1});
  CHECK_THROWS(parse_cycles("(1,2", 4));
  CHECK_THROWS(parse_cycles("(1,5)", 4));
  CHECK_THROWS(parse_cycles("(1,2)(2,3)", 4));
  CHECK_THROWS(parse_cycles("", 4));
}

TEST_CASE("systems with a cyclic automorphism") {
  const auto sigma7 = parse_cycles("(1,2,3,4,5,6,7)", 7);
  std::vector<star_system> got;
  enumerate_invariant_systems(7, 3, sigma7, {}, [&](const star_system& s) {
    got.push_back(s);
    return true;
  });
  std::vector<star_system> filtered;
  for (const auto& s : oracle::all_systems(7, 3))
    if (fixed_by(s, sigma7)) filtered.push_back(s);
  CHECK(!got.empty());
  CHECK(key_set(got) == key_set(filtered));
  CHECK(got.size() == filtered.size());

  // 12 blocks cannot split into orbits of length 9
  const auto sigma9 = parse_cycles("(1,2,3,4,5,6,7,8,9)", 9);
  CHECK(enumerate_invariant_systems(9, 3, sigma9, {}, [](const star_system&) { return true; }) == 0);

  const auto rho = parse_cycles("(1,2,3)(4,5,6)(7,8,9)", 9);
  std::size_t count = 0;
  enumerate_invariant_systems(9, 3, rho, {}, [&](const star_system& s) {
    CHECK(verify_system(s).valid);
    CHECK(fixed_by(s, rho));
    ++count;
    return true;
  });
  CHECK(count > 0);

  // an involution: the stream may be empty; whatever comes out is fixed
  const auto tau = parse_cycles("(1,2)", 7);
  std::vector<star_system> inv;
  enumerate_invariant_systems(7, 3, tau, {}, [&](const star_system& s) {
    inv.push_back(s);
    return true;
  });
  std::size_t expected = 0;
  for (const auto& s : oracle::all_systems(7, 3)) expected += fixed_by(s, tau);
  CHECK(inv.size() == expected);

  CHECK_THROWS_AS(enumerate_invariant_systems(7, 3, parse_cycles("(1)", 7), {}, [](const star_system&) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_invariant_systems(7, 3, permutation{1, 1, 2, 3, 4, 5, 6}, {},
                                              [](const star_system&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("census") {
  const auto r = census({fixtures::s3_9_eight(), fixtures::s3_9_twelve(), fixtures::s3_9_eight()});
  CHECK(r.histogram == std::map<int, long long>{{8, 2}, {12, 1}});
  CHECK(r.total == 3);
  CHECK(r.timeouts == 0);
  CHECK(r.n == 9);

  CHECK(census({fixtures::s3_9_twelve()}).histogram == std::map<int, long long>{{12, 1}});
  const auto empty = census({});
  CHECK(empty.histogram.empty());
  CHECK(empty.total == 0);

  const auto threaded = census({fixtures::s3_9_eight(), fixtures::s3_9_twelve(), fixtures::s3_9_eight()},
                               std::nullopt, 3);
  CHECK(threaded.histogram == r.histogram);
  const auto mixed = census({fixtures::s3_9_eight(), fixtures::s3_10_eight(), fixtures::s3_9_twelve()});
  CHECK(mixed.histogram == std::map<int, long long>{{8, 2}, {12, 1}});
  CHECK(mixed.n == 0);

  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 9);
  CHECK(j["histogram"]["8"] == 2);
  CHECK(j["histogram"]["12"] == 1);
  CHECK(j["total"] == 3);
  CHECK(j["timeouts"] == 0);
  CHECK(j.contains("seed"));
  CHECK(j.contains("runtime_seconds"));
  const auto text = to_text(r);
  CHECK(text.find("              8 | 2") != std::string::npos);
  CHECK(text.find("total=3") != std::string::npos);
}

TEST_CASE("canonical forms") {
  const auto s = fixtures::s3_9_eight();
  const auto c = canonical_form(s);
  CHECK(verify_system(c).valid);
  CHECK(canonical_code(c) == canonical_code(s));
  CHECK(oracle::block_set_key(canonical_form(c)) == oracle::block_set_key(c));
  std::mt19937_64 rng(3);
  std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int i = 0; i < 20; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(oracle::block_set_key(canonical_form(oracle::apply(s, perm))) == oracle::block_set_key(c));
  }
  CHECK(canonical_code(fixtures::s3_9_twelve()) != canonical_code(s));
}

TEST_CASE("orbit representatives match brute-force orbit partition") {
  for (int n : {6, 7}) {
    std::vector<star_system> reps;
    const auto r = orbit_representatives(n, 3, std::nullopt, [&](const star_system& s) {
      reps.push_back(s);
      return true;
    });
    CAPTURE(n);
    CHECK(r.complete);
    CHECK(r.representatives == reps.size());
    CHECK(reps.size() == oracle::orbit_count(oracle::all_systems(n, 3)));
    std::set<std::vector<int>> codes;
    for (const auto& s : reps) {
      CHECK(verify_system(s).valid);
      CHECK(oracle::block_set_key(canonical_form(s)) == oracle::block_set_key(s));
      codes.insert(canonical_code(s));
    }
    CHECK(codes.size() == reps.size());
  }
  CHECK_THROWS(orbit_representatives(12, 3, std::nullopt, [](const star_system&) { return true; }));
}
