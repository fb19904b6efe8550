#include "starsys/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace starsys {

namespace {

// A block written in positions 1..|group| of a vertex group.
struct local_star {
  int root;
  std::vector<int> pendants;
};

const std::vector<local_star>& s3_6_template() {
  static const std::vector<local_star> t = {
      {1, {3, 5, 6}}, {2, {1, 3, 6}}, {4, {1, 2, 3}}, {5, {2, 3, 4}}, {6, {3, 4, 5}}};
  return t;
}

const std::vector<local_star>& s3_9_template() {
  static const std::vector<local_star> t = {
      {1, {3, 5, 6}}, {2, {1, 3, 6}}, {4, {1, 2, 3}}, {5, {2, 3, 4}},
      {6, {3, 4, 5}}, {7, {1, 2, 3}}, {8, {4, 5, 9}}, {7, {4, 5, 8}},
      {8, {1, 2, 3}}, {6, {7, 8, 9}}, {9, {1, 2, 3}}, {9, {4, 5, 7}}};
  return t;
}

// Colour classes of the 9-point system, as indices into s3_9_template().
const std::vector<std::vector<std::size_t>>& s3_9_classes() {
  static const std::vector<std::vector<std::size_t>> c = {{0},    {1, 11}, {2, 9}, {3},
                                                          {4},    {5, 6},  {7, 10}, {8}};
  return c;
}

std::vector<local_star> base_2e_template(int e) {
  const int hub = 2 * e;
  const int mod = 2 * e - 1;
  std::vector<local_star> t;
  for (int i = 1; i <= mod; ++i) {
    local_star s{i, {hub}};
    for (int d = 1; d < e; ++d) s.pendants.push_back((i - 1 + d) % mod + 1);
    t.push_back(std::move(s));
  }
  return t;
}

// The within-group system of the general families.  For e = 3 this is
// the five-block S_3(6) of base_s3_6 rather than base_system_2e(3).
std::vector<local_star> group_template(int e) {
  return e == 3 ? s3_6_template() : base_2e_template(e);
}

star place(const local_star& s, std::span<const vertex> group) {
  auto at = [&](int pos) { return group[static_cast<std::size_t>(pos - 1)]; };
  std::vector<vertex> p;
  p.reserve(s.pendants.size());
  for (int q : s.pendants) p.push_back(at(q));
  return star(at(s.root), std::move(p));
}

std::string text(const star& s) {
  std::ostringstream os;
  os << '{' << s.root << ';';
  for (std::size_t i = 0; i < s.pendants.size(); ++i) os << (i ? "," : "") << s.pendants[i];
  os << '}';
  return os.str();
}

std::string c_label(int factor, int k) { return "C" + std::to_string(factor) + "_" + std::to_string(k); }

// Accumulates blocks into labelled colour classes and refuses any addition
// that would put two intersecting blocks in one class.
class class_builder {
 public:
  class_builder(int n, int e, std::string family) : n_(n), family_(std::move(family)) {
    out_.system.n = n;
    out_.system.e = e;
  }

  void open(const std::string& label) {
    auto [it, fresh] = index_.try_emplace(label, out_.classes.size());
    if (!fresh) throw std::logic_error("construction " + family_ + ": class " + label + " opened twice");
    out_.classes.push_back({label, {}});
    occupied_.emplace_back(static_cast<std::size_t>(n_) + 1, 0);
  }

  void add(const std::string& label, star s, const std::string& step) {
    auto it = index_.find(label);
    if (it == index_.end())
      throw std::logic_error("construction " + family_ + ", " + step + ": no class " + label);
    auto& occ = occupied_[it->second];
    auto check = [&](vertex x) {
      if (x < 1 || x > n_)
        throw std::logic_error("construction " + family_ + ", " + step + ": vertex " +
                               std::to_string(x) + " out of range");
      if (occ[static_cast<std::size_t>(x)])
        throw std::logic_error("construction " + family_ + ", " + step + ": " + text(s) +
                               " meets class " + label + " at vertex " + std::to_string(x));
    };
    check(s.root);
    for (vertex p : s.pendants) check(p);
    occ[static_cast<std::size_t>(s.root)] = 1;
    for (vertex p : s.pendants) occ[static_cast<std::size_t>(p)] = 1;
    out_.classes[it->second].members.push_back(out_.system.blocks.size());
    out_.system.blocks.push_back(std::move(s));
  }

  coloured_star_system finish() {
    for (const auto& c : out_.classes)
      if (c.members.empty())
        throw std::logic_error("construction " + family_ + ": class " + c.label + " is empty");
    if (auto r = verify_colouring(out_); !r)
      throw std::logic_error("construction " + family_ + " produced an invalid colouring: " + r.message);
    return std::move(out_);
  }

 private:
  int n_;
  std::string family_;
  coloured_star_system out_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<char>> occupied_;
};

group_partition make_layout(const std::vector<int>& sizes, bool extension) {
  group_partition L;
  vertex next = 1;
  for (int s : sizes) {
    std::vector<vertex> g(static_cast<std::size_t>(s));
    for (auto& x : g) x = next++;
    L.groups.push_back(std::move(g));
  }
  if (extension) L.extension = next;
  return L;
}

int layout_order(const group_partition& L) {
  int n = L.extension ? 1 : 0;
  for (const auto& g : L.groups) n += static_cast<int>(g.size());
  return n;
}

std::span<const vertex> group(const group_partition& L, int i) {
  return L.groups.at(static_cast<std::size_t>(i - 1));
}

bool is_nine(const group_partition& L, int i) { return group(L, i).size() == 9; }

// Opens C{f}_1..C{f}_{2e} and fills them with the cross-pair classes of
// every pair in factor f.
void add_cross_classes(class_builder& b, const group_partition& L, const pair_factorization& F,
                       int f, int e) {
  for (int k = 1; k <= 2 * e; ++k) b.open(c_label(f, k));
  for (const group_pair& p : F.factors.at(static_cast<std::size_t>(f - 1))) {
    auto first = group(L, p.first);
    auto second = group(L, p.second);
    std::vector<std::vector<star>> classes;
    if (first.size() == second.size() && first.size() == static_cast<std::size_t>(2 * e))
      classes = cross_pair_classes(first, second, e);
    else if (first.size() == 6 && second.size() == 9)
      classes = cross_pair_classes_6_9(first, second);
    else
      throw std::logic_error("cross pair (" + std::to_string(p.first) + "," +
                             std::to_string(p.second) + ") has no class pattern");
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (star& s : classes[k])
        b.add(c_label(f, static_cast<int>(k) + 1), std::move(s),
              "cross-pair classes of factor " + std::to_string(f));
  }
}

// Even number of groups: within-group blocks share the colours D1.. across
// groups (D1..D8 when the 9-group is present), cross edges get 2e colours
// per 1-factor.
void build_even(class_builder& b, const group_partition& L, const pair_factorization& F, int e) {
  const bool nine = std::any_of(L.groups.begin(), L.groups.end(),
                                [](const auto& g) { return g.size() == 9; });
  const auto base = group_template(e);
  const int d_count = nine ? 8 : 2 * e - 1;
  for (int k = 1; k <= d_count; ++k) b.open("D" + std::to_string(k));
  for (int i = 1; i <= static_cast<int>(L.groups.size()); ++i) {
    if (is_nine(L, i)) {
      const auto& cls = s3_9_classes();
      for (std::size_t k = 0; k < cls.size(); ++k)
        for (std::size_t blk : cls[k])
          b.add("D" + std::to_string(k + 1), place(s3_9_template()[blk], group(L, i)),
                "9-point system on V" + std::to_string(i));
    } else {
      for (std::size_t k = 0; k < base.size(); ++k)
        b.add("D" + std::to_string(k + 1), place(base[k], group(L, i)),
              "base system on V" + std::to_string(i));
    }
  }
  for (int f = 1; f <= static_cast<int>(F.factors.size()); ++f) add_cross_classes(b, L, F, f, e);
}

// Odd number of groups over a near-1-factorization: the blocks on V_i join
// the colours of F_i, which misses V_i.
void build_odd(class_builder& b, const group_partition& L, const pair_factorization& F, int e) {
  const int m = static_cast<int>(L.groups.size());
  for (int f = 1; f <= m; ++f) add_cross_classes(b, L, F, f, e);
  bool nine = false;
  const auto base = group_template(e);
  for (int i = 1; i <= m; ++i) {
    if (F.missing.at(static_cast<std::size_t>(i - 1)) != i)
      throw std::logic_error("factor " + std::to_string(i) + " does not miss V" + std::to_string(i));
    const std::string step = "blocks on the missing point V" + std::to_string(i);
    if (is_nine(L, i)) {
      nine = true;
      b.open("A1");
      b.open("A2");
      const auto& cls = s3_9_classes();
      for (std::size_t k = 0; k < cls.size(); ++k) {
        const std::string label = k < 6 ? c_label(i, static_cast<int>(k) + 1) : "A" + std::to_string(k - 5);
        for (std::size_t blk : cls[k]) b.add(label, place(s3_9_template()[blk], group(L, i)), step);
      }
    } else {
      for (std::size_t k = 0; k < base.size(); ++k)
        b.add(c_label(i, static_cast<int>(k) + 1), place(base[k], group(L, i)), step);
    }
  }
  if (nine && L.groups.back().size() != 9) throw std::logic_error("9-group must be last");
}

pair_factorization odd_factorization(int m, const std::vector<orientation_constraint>& constraints) {
  if (m == 1) {
    pair_factorization f;
    f.m = 1;
    f.factors.emplace_back();
    f.missing.emplace_back(1);
    return f;
  }
  return near_one_factorization(m, constraints);
}

star x_star(vertex x, std::span<const vertex> g, std::initializer_list<int> positions) {
  std::vector<vertex> p;
  for (int q : positions) p.push_back(g[static_cast<std::size_t>(q - 1)]);
  return star(x, std::move(p));
}

star x_half(vertex x, std::span<const vertex> g, int e, bool second_half) {
  std::vector<vertex> p(g.begin() + (second_half ? e : 0), g.begin() + (second_half ? 2 * e : e));
  return star(x, std::move(p));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

group_partition layout_3(int e, int groups, bool x) {
  return make_layout(std::vector<int>(static_cast<std::size_t>(groups), 2 * e), x);
}

group_partition layout_4(int six_groups, bool x) {
  std::vector<int> sizes(static_cast<std::size_t>(six_groups), 6);
  sizes.push_back(9);
  return make_layout(sizes, x);
}

}  // namespace

coloured_star_system base_system_2e(int e) {
  require(e >= 3, "base_system_2e: e must be at least 3");
  star_system sys{2 * e, e, {}};
  std::vector<vertex> g(static_cast<std::size_t>(2 * e));
  for (int i = 0; i < 2 * e; ++i) g[static_cast<std::size_t>(i)] = i + 1;
  for (const auto& s : base_2e_template(e)) sys.blocks.push_back(place(s, g));
  return singleton_colouring(std::move(sys));
}

coloured_star_system base_s3_6() {
  star_system sys{6, 3, {}};
  const std::vector<vertex> g{1, 2, 3, 4, 5, 6};
  for (const auto& s : s3_6_template()) sys.blocks.push_back(place(s, g));
  return singleton_colouring(std::move(sys));
}

coloured_star_system base_s3_9() {
  coloured_star_system c;
  c.system = {9, 3, {}};
  const std::vector<vertex> g{1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (const auto& s : s3_9_template()) c.system.blocks.push_back(place(s, g));
  const auto& cls = s3_9_classes();
  for (std::size_t k = 0; k < cls.size(); ++k)
    c.classes.push_back({"C" + std::to_string(k + 1), cls[k]});
  return c;
}

std::vector<std::vector<star>> cross_pair_classes(std::span<const vertex> first,
                                                  std::span<const vertex> second, int e) {
  require(e >= 1, "cross_pair_classes: e must be positive");
  const auto size = static_cast<std::size_t>(2 * e);
  require(first.size() == size && second.size() == size, "cross_pair_classes: groups must have size 2e");
  for (vertex x : first)
    require(std::find(second.begin(), second.end(), x) == second.end(),
            "cross_pair_classes: groups must be disjoint");

  const std::vector<vertex> low(second.begin(), second.begin() + e);
  const std::vector<vertex> high(second.begin() + e, second.end());
  std::vector<std::vector<star>> classes;
  for (int r = 1; r <= e; ++r) {
    const vertex a = first[static_cast<std::size_t>(2 * r - 2)];
    const vertex b = first[static_cast<std::size_t>(2 * r - 1)];
    classes.push_back({star(a, low), star(b, high)});
    classes.push_back({star(a, high), star(b, low)});
  }
  return classes;
}

std::vector<std::vector<star>> cross_pair_classes_6_9(std::span<const vertex> first,
                                                      std::span<const vertex> second) {
  require(first.size() == 6 && second.size() == 9, "cross_pair_classes_6_9: groups must have sizes 6 and 9");
  for (vertex x : first)
    require(std::find(second.begin(), second.end(), x) == second.end(),
            "cross_pair_classes_6_9: groups must be disjoint");

  auto third = [&](int j) {
    const auto at = static_cast<std::ptrdiff_t>(3 * j);
    return std::vector<vertex>(second.begin() + at, second.begin() + at + 3);
  };
  std::vector<std::vector<star>> classes;
  for (int half = 0; half < 2; ++half)
    for (int shift = 0; shift < 3; ++shift) {
      std::vector<star> cls;
      for (int r = 0; r < 3; ++r)
        cls.emplace_back(first[static_cast<std::size_t>(3 * half + r)], third((r + shift) % 3));
      classes.push_back(std::move(cls));
    }
  return classes;
}

coloured_star_system construct_thm_3_1(int e, int t) {
  require(e >= 3 && t >= 1, "construct_thm_3_1: need e >= 3 and t >= 1");
  const auto L = layout_3(e, 2 * t, false);
  class_builder b(layout_order(L), e, "even");
  build_even(b, L, one_factorization(2 * t), e);
  return b.finish();
}

coloured_star_system construct_thm_3_2(int e, int t) {
  require(e >= 3 && t >= 1, "construct_thm_3_2: need e >= 3 and t >= 1");
  const auto L = layout_3(e, 2 * t, true);
  const vertex x = *L.extension;
  std::vector<orientation_constraint> firsts;
  for (int i = 1; i <= 2 * t - 1; ++i) firsts.emplace_back(i, i);
  const auto F = one_factorization(2 * t, firsts);

  class_builder b(layout_order(L), e, "even-plus-point");
  build_even(b, L, F, e);
  for (int i = 1; i <= 2 * t - 1; ++i) {
    const std::string step = "x-stars of V" + std::to_string(i) + " into the colours of F" + std::to_string(i);
    b.add(c_label(i, 1), x_half(x, group(L, i), e, true), step);
    b.add(c_label(i, 2 * e), x_half(x, group(L, i), e, false), step);
  }
  b.open("A1");
  b.open("A2");
  b.add("A1", x_half(x, group(L, 2 * t), e, false), "x-stars of the last group");
  b.add("A2", x_half(x, group(L, 2 * t), e, true), "x-stars of the last group");
  return b.finish();
}

coloured_star_system construct_thm_3_3(int e, int t) {
  require(e >= 3 && t >= 0, "construct_thm_3_3: need e >= 3 and t >= 0");
  if (t == 0) return e == 3 ? base_s3_6() : base_system_2e(e);
  const auto L = layout_3(e, 2 * t + 1, false);
  class_builder b(layout_order(L), e, "odd");
  build_odd(b, L, near_one_factorization(2 * t + 1), e);
  return b.finish();
}

coloured_star_system construct_thm_3_4(int e, int t) {
  require(e >= 3 && t >= 0, "construct_thm_3_4: need e >= 3 and t >= 0");
  if (t == 0) {
    // order 2e+1: block i is {i; i+1, ..., i+e} mod 2e+1, one colour each
    const int n = 2 * e + 1;
    star_system sys{n, e, {}};
    for (int i = 1; i <= n; ++i) {
      std::vector<vertex> p;
      for (int d = 1; d <= e; ++d) p.push_back((i - 1 + d) % n + 1);
      sys.blocks.emplace_back(i, std::move(p));
    }
    return singleton_colouring(std::move(sys));
  }
  const int m = 2 * t + 1;
  const auto L = layout_3(e, m, true);
  const vertex x = *L.extension;
  auto host = [m](int i) { return i == 1 ? m : i - 1; };  // F_0 = F_m
  std::vector<orientation_constraint> firsts;
  for (int i = 1; i <= m; ++i) firsts.emplace_back(host(i), i);

  class_builder b(layout_order(L), e, "odd-plus-point");
  build_odd(b, L, near_one_factorization(m, firsts), e);
  for (int i = 1; i <= m; ++i) {
    const std::string step =
        "x-stars of V" + std::to_string(i) + " into the colours of F" + std::to_string(host(i));
    b.add(c_label(host(i), 1), x_half(x, group(L, i), e, true), step);
    b.add(c_label(host(i), 2 * e), x_half(x, group(L, i), e, false), step);
  }
  return b.finish();
}

coloured_star_system construct_thm_4_1(int t) {
  require(t >= 1, "construct_thm_4_1: need t >= 1");
  const auto L = layout_4(2 * t - 1, false);
  class_builder b(layout_order(L), 3, "even-with-nine");
  build_even(b, L, one_factorization(2 * t), 3);
  return b.finish();
}

coloured_star_system construct_thm_4_2(int t) {
  require(t >= 1, "construct_thm_4_2: need t >= 1");
  const auto L = layout_4(2 * t - 1, true);
  const vertex x = *L.extension;
  std::vector<orientation_constraint> firsts;
  for (int i = 1; i <= 2 * t - 1; ++i) firsts.emplace_back(i, i);

  class_builder b(layout_order(L), 3, "even-with-nine-plus-point");
  build_even(b, L, one_factorization(2 * t, firsts), 3);
  for (int i = 1; i <= 2 * t - 1; ++i) {
    const std::string step = "x-stars of V" + std::to_string(i) + " into the colours of F" + std::to_string(i);
    b.add(c_label(i, 6), x_star(x, group(L, i), {1, 2, 3}), step);
    b.add(c_label(i, 1), x_star(x, group(L, i), {4, 5, 6}), step);
  }
  const auto nine = group(L, 2 * t);
  b.open("E1");
  b.open("E2");
  b.add("E1", x_star(x, nine, {1, 2, 3}), "x-stars of the 9-group");
  b.add("E2", x_star(x, nine, {4, 5, 6}), "x-stars of the 9-group");
  b.add("D1", x_star(x, nine, {7, 8, 9}), "x-star {x;v7,v8,v9} into D1");
  return b.finish();
}

coloured_star_system construct_thm_4_3(int t) {
  require(t >= 0, "construct_thm_4_3: need t >= 0");
  const auto L = layout_4(2 * t, false);
  class_builder b(layout_order(L), 3, "odd-with-nine");
  build_odd(b, L, odd_factorization(2 * t + 1, {}), 3);
  return b.finish();
}

coloured_star_system construct_thm_4_4(int t) {
  require(t >= 0, "construct_thm_4_4: need t >= 0");
  const int m = 2 * t + 1;
  const auto L = layout_4(2 * t, true);
  const vertex x = *L.extension;
  auto host = [t](int i) { return i == 1 ? 2 * t : i - 1; };  // F_0 = F_{2t}
  std::vector<orientation_constraint> firsts;
  for (int i = 1; i <= 2 * t; ++i) firsts.emplace_back(host(i), i);

  class_builder b(layout_order(L), 3, "odd-with-nine-plus-point");
  build_odd(b, L, odd_factorization(m, firsts), 3);
  for (int i = 1; i <= 2 * t; ++i) {
    const std::string step =
        "x-stars of V" + std::to_string(i) + " into the colours of F" + std::to_string(host(i));
    b.add(c_label(host(i), 6), x_star(x, group(L, i), {1, 2, 3}), step);
    b.add(c_label(host(i), 1), x_star(x, group(L, i), {4, 5, 6}), step);
  }
  const auto nine = group(L, m);
  b.add(c_label(m, 1), x_star(x, nine, {2, 4, 7}), "x-star {x;v2,v4,v7} of the 9-group");
  b.add(c_label(m, 4), x_star(x, nine, {1, 6, 8}), "x-star {x;v1,v6,v8} of the 9-group");
  b.open("A3");
  b.add("A3", x_star(x, nine, {3, 5, 9}), "x-star {x;v3,v5,v9} of the 9-group");
  return b.finish();
}

construction_plan plan_construction(int n, int e) {
  if (!is_admissible(n, e))
    throw construction_error(construction_error::kind::inadmissible,
                             "order " + std::to_string(n) + " is not admissible for " +
                                 std::to_string(e) + "-stars");
  construction_plan p;
  const int r = n % (4 * e);
  if (r == 0) {
    p = {"even", n / (4 * e), n - 1, layout_3(e, 2 * (n / (4 * e)), false)};
  } else if (r == 1) {
    p = {"even-plus-point", (n - 1) / (4 * e), n, layout_3(e, 2 * ((n - 1) / (4 * e)), true)};
  } else if (r == 2 * e) {
    const int t = (n - 2 * e) / (4 * e);
    p = {"odd", t, t >= 1 ? n : n - 1, layout_3(e, 2 * t + 1, false)};
  } else if (r == 2 * e + 1) {
    const int t = (n - 2 * e - 1) / (4 * e);
    p = {"odd-plus-point", t, t >= 1 ? n - 1 : n, t >= 1 ? layout_3(e, 2 * t + 1, true) : make_layout({n}, false)};
  } else if (e == 3 && n % 12 == 3) {
    const int t = (n - 3) / 12;
    p = {"even-with-nine", t, n - 1, layout_4(2 * t - 1, false)};
  } else if (e == 3 && n % 12 == 4) {
    const int t = (n - 4) / 12;
    p = {"even-with-nine-plus-point", t, n, layout_4(2 * t - 1, true)};
  } else if (e == 3 && n % 12 == 9) {
    const int t = (n - 9) / 12;
    p = {"odd-with-nine", t, n - 1, layout_4(2 * t, false)};
  } else if (e == 3 && n % 12 == 10) {
    const int t = (n - 10) / 12;
    p = {"odd-with-nine-plus-point", t, n - 1, layout_4(2 * t, true)};
  } else {
    throw construction_error(construction_error::kind::unsupported_class,
                             "no construction for order " + std::to_string(n) + " with " +
                                 std::to_string(e) + "-stars (n mod " + std::to_string(2 * e) +
                                 " = " + std::to_string(n % (2 * e)) + ")");
  }
  return p;
}

bool is_covered(int n, int e) {
  try {
    plan_construction(n, e);
    return true;
  } catch (const construction_error&) {
    return false;
  }
}

coloured_star_system construct(int n, int e) {
  const auto p = plan_construction(n, e);
  if (p.family == "even") return construct_thm_3_1(e, p.t);
  if (p.family == "even-plus-point") return construct_thm_3_2(e, p.t);
  if (p.family == "odd") return construct_thm_3_3(e, p.t);
  if (p.family == "odd-plus-point") return construct_thm_3_4(e, p.t);
  if (p.family == "even-with-nine") return construct_thm_4_1(p.t);
  if (p.family == "even-with-nine-plus-point") return construct_thm_4_2(p.t);
  if (p.family == "odd-with-nine") return construct_thm_4_3(p.t);
  return construct_thm_4_4(p.t);
}

}  // namespace starsys
