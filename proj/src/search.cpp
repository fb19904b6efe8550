#include "starsys/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <chrono>
#include <climits>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "starsys/exact_cover.hpp"

namespace starsys {

namespace {

using clock_type = std::chrono::steady_clock;

long long binom(int a, int b) {
  if (b < 0 || a < b) return 0;
  static const auto table = [] {
    std::vector<std::vector<long long>> t(65, std::vector<long long>(65, 0));
    for (int i = 0; i <= 64; ++i) {
      t[static_cast<std::size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            (j < i ? t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
    }
    return t;
  }();
  if (a > 64) throw std::out_of_range("binom: argument too large");
  return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t bit(vertex v) { return std::uint64_t{1} << v; }

void check_search_parameters(int n, int e) {
  if (!is_admissible(n, e))
    throw std::invalid_argument("order " + std::to_string(n) + " is not admissible for " +
                                std::to_string(e) + "-stars");
  if (n > 63) throw std::invalid_argument("search supports n <= 63");
}

// Exact cover over the edges of K_n with the candidate stars generated on
// the fly from per-vertex masks of uncovered edges.
class cover_engine {
 public:
  using complete_fn = std::function<bool(const std::vector<star>&)>;

  cover_engine(int n, int e, int cap = INT_MAX)
      : n_(n), e_(e), cap_(cap), open_(static_cast<std::size_t>(n) + 1, 0),
        roots_(static_cast<std::size_t>(n) + 1, 0) {
    for (vertex v = 1; v <= n; ++v) open_[static_cast<std::size_t>(v)] = all_but(v);
    remaining_ = static_cast<long long>(n) * (n - 1) / 2;
  }

  bool can_apply(const star& s) const {
    if (roots_[idx(s.root)] >= cap_) return false;
    for (vertex p : s.pendants)
      if (!(open_[idx(s.root)] & bit(p))) return false;
    return true;
  }

  void apply(const star& s) {
    for (vertex p : s.pendants) {
      open_[idx(s.root)] &= ~bit(p);
      open_[idx(p)] &= ~bit(s.root);
    }
    ++roots_[idx(s.root)];
    remaining_ -= e_;
    chosen_.push_back(s);
  }

  void undo() {
    const star& s = chosen_.back();
    for (vertex p : s.pendants) {
      open_[idx(s.root)] |= bit(p);
      open_[idx(p)] |= bit(s.root);
    }
    --roots_[idx(s.root)];
    remaining_ += e_;
    chosen_.pop_back();
  }

  bool done() const { return remaining_ == 0; }

  // Uncovered edge with the fewest candidate stars, or nullopt when some
  // edge has none.
  std::optional<edge> choose() const {
    std::optional<edge> best;
    long long best_count = LLONG_MAX;
    for (vertex u = 1; u <= n_; ++u) {
      std::uint64_t m = open_[idx(u)] & ~((bit(u) << 1) - 1);
      while (m) {
        const vertex v = std::countr_zero(m);
        m &= m - 1;
        const long long c = count(u) + count(v);
        if (c < best_count) {
          best_count = c;
          best = edge(u, v);
          if (c == 0) return std::nullopt;
        }
      }
    }
    return best;
  }

  std::vector<star> candidates(const edge& col) const {
    std::vector<star> out;
    for (int side = 0; side < 2; ++side) {
      const vertex r = side ? col.v : col.u;
      const vertex p = side ? col.u : col.v;
      if (count(r) == 0) continue;
      std::vector<vertex> pool;
      for (std::uint64_t m = open_[idx(r)] & ~bit(p); m; m &= m - 1) pool.push_back(std::countr_zero(m));
      const int k = e_ - 1;
      std::vector<int> pick(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::vector<vertex> pend{p};
        for (int i : pick) pend.push_back(pool[static_cast<std::size_t>(i)]);
        std::sort(pend.begin(), pend.end());
        out.emplace_back(r, std::move(pend));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    return out;
  }

  // Depth-first over all completions; false once `complete` asks to stop or
  // the node limit is hit.
  bool run(const complete_fn& complete, std::mt19937_64* rng = nullptr) {
    if (node_limit_ && ++nodes_ > *node_limit_) {
      exhausted_ = true;
      return false;
    }
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (done()) return complete(chosen_);
    const auto col = choose();
    if (!col) return true;
    auto cands = candidates(*col);
    if (rng) std::shuffle(cands.begin(), cands.end(), *rng);
    for (const star& s : cands) {
      apply(s);
      const bool go = run(complete, rng);
      undo();
      if (!go) return false;
    }
    return true;
  }

  void set_node_limit(std::uint64_t limit) { node_limit_ = limit; }
  void set_stop_flag(const std::atomic<bool>* flag) { stop_ = flag; }
  bool exhausted() const { return exhausted_; }

 private:
  static std::size_t idx(vertex v) { return static_cast<std::size_t>(v); }
  std::uint64_t all_but(vertex v) const { return (((bit(n_) << 1) - 1) & ~std::uint64_t{1}) & ~bit(v); }

  long long count(vertex r) const {
    if (roots_[idx(r)] >= cap_) return 0;
    return binom(std::popcount(open_[idx(r)]) - 1, e_ - 1);
  }

  int n_, e_, cap_;
  std::vector<std::uint64_t> open_;
  std::vector<int> roots_;
  long long remaining_ = 0;
  std::vector<star> chosen_;
  std::optional<std::uint64_t> node_limit_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  const std::atomic<bool>* stop_ = nullptr;
};

star_system make_system(int n, int e, std::vector<star> blocks) {
  std::sort(blocks.begin(), blocks.end(), star_less);
  return star_system{n, e, std::move(blocks)};
}

std::vector<vertex> flat_key(const star_system& sys) {
  std::vector<vertex> k;
  for (const star& s : sys.blocks) {
    auto sk = s.key();
    k.insert(k.end(), sk.begin(), sk.end());
  }
  return k;
}

struct key_hash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (int x : v) h = splitmix(h ^ static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

int compat_graph::index_of(const star& s) const {
  if (s.root < 1 || s.root > n || s.size() != e)
    throw std::invalid_argument("index_of: not an e-star on 1..n");
  const auto p = s.sorted_pendants();
  long long rank = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || p[i] > n || p[i] == s.root || (i && p[i] == p[i - 1]))
      throw std::invalid_argument("index_of: not an e-star on 1..n");
    const int pos = p[i] < s.root ? p[i] - 1 : p[i] - 2;  // 0-based among the other n-1 points
    rank += binom(pos, static_cast<int>(i) + 1);
  }
  return static_cast<int>((s.root - 1) * binom(n - 1, e) + rank);
}

compat_graph compatibility_graph(int n, int e) {
  if (e < 1 || n < 2 * e) throw std::invalid_argument("compatibility_graph: need n >= 2e");
  if (n > 64) throw std::invalid_argument("compatibility_graph: n must be at most 64");
  compat_graph g;
  g.n = n;
  g.e = e;
  for (vertex r = 1; r <= n; ++r) {
    std::vector<vertex> others;
    for (vertex v = 1; v <= n; ++v)
      if (v != r) others.push_back(v);
    // colex order over e-subsets of `others`
    std::vector<int> pick(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<vertex> p;
      for (int i : pick) p.push_back(others[static_cast<std::size_t>(i)]);
      g.stars.emplace_back(r, std::move(p));
      int i = 0;
      while (i + 1 < e && pick[static_cast<std::size_t>(i)] + 1 == pick[static_cast<std::size_t>(i + 1)]) ++i;
      if (pick[static_cast<std::size_t>(i)] + 1 >= n - 1) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) pick[static_cast<std::size_t>(j)] = j;
    }
  }
  g.graph = simple_graph(static_cast<int>(g.stars.size()));
  // Two stars share an edge iff one's root is a pendant of the other and
  // vice versa, or they share the root and a pendant.
  const auto count = g.stars.size();
  std::vector<std::uint64_t> pend(count);
  for (std::size_t i = 0; i < count; ++i)
    for (vertex p : g.stars[i].pendants) pend[i] |= bit(p);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const star& a = g.stars[i];
      const star& b = g.stars[j];
      bool share;
      if (a.root == b.root)
        share = (pend[i] & pend[j]) != 0;
      else
        share = (pend[i] & bit(b.root)) && (pend[j] & bit(a.root));
      if (!share) g.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

std::size_t enumerate_systems(int n, int e, const search_options& opts, const system_sink& sink) {
  check_search_parameters(n, e);
  if (opts.limit && *opts.limit == 0) return 0;

  cover_engine root(n, e);
  const auto col = root.choose();
  if (!col) return 0;
  auto top = root.candidates(*col);
  if (opts.seed) {
    std::mt19937_64 rng(splitmix(opts.seed));
    std::shuffle(top.begin(), top.end(), rng);
  }

  const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(top.size())));
  std::mutex mu;
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::size_t emitted = 0;
  std::unordered_set<std::vector<vertex>, key_hash> seen;
  std::exception_ptr failure;

  auto emit = [&](const std::vector<star>& blocks) {
    auto sys = make_system(n, e, blocks);
    std::lock_guard lock(mu);
    if (stop.load()) return false;
    if (workers > 1 && !seen.insert(flat_key(sys)).second) return true;
    ++emitted;
    bool go = true;
    try {
      go = sink(sys);
    } catch (...) {
      failure = std::current_exception();
      go = false;
    }
    if (!go || (opts.limit && emitted >= *opts.limit)) {
      stop.store(true);
      return false;
    }
    return true;
  };

  auto work = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= top.size()) return;
      cover_engine engine = root;
      engine.set_stop_flag(&stop);
      engine.apply(top[i]);
      if (opts.seed) {
        std::mt19937_64 rng(splitmix(opts.seed ^ splitmix(i + 1)));
        engine.run(emit, &rng);
      } else {
        engine.run(emit);
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return emitted;
}

std::vector<star_system> collect_systems(int n, int e, const search_options& opts) {
  std::vector<star_system> out;
  enumerate_systems(n, e, opts, [&](const star_system& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

star_system sample_system(int n, int e, std::uint64_t seed) {
  check_search_parameters(n, e);
  const auto budget_nodes = static_cast<std::uint64_t>(50 * block_count(n, e) + 1000);
  std::uint64_t s = seed;
  while (true) {
    s = splitmix(s);
    std::mt19937_64 rng(s);
    cover_engine engine(n, e);
    engine.set_node_limit(budget_nodes);
    std::optional<star_system> found;
    engine.run(
        [&](const std::vector<star>& blocks) {
          found = make_system(n, e, blocks);
          return false;
        },
        &rng);
    if (found) return *found;
  }
}

permutation parse_cycles(const std::string& text, int n) {
  permutation perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation \"" + text + "\": " + why);
  };
  skip();
  if (pos == text.size()) fail("empty");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<vertex> cycle;
    while (true) {
      skip();
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) fail("expected a point");
      const int x = std::stoi(text.substr(pos, end - pos));
      if (x < 1 || x > n) fail("point " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(x)]++) fail("point " + std::to_string(x) + " repeated");
      cycle.push_back(x);
      pos = end;
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      perm[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    skip();
  }
  return perm;
}

std::size_t enumerate_invariant_systems(int n, int e, const permutation& sigma,
                                        const search_options& opts, const system_sink& sink) {
  check_search_parameters(n, e);
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("automorphism must act on 1..n");
  {
    std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
    for (vertex x : sigma)
      if (x < 1 || x > n || hit[static_cast<std::size_t>(x)]++)
        throw std::invalid_argument("automorphism is not a permutation of 1..n");
    bool identity = true;
    for (int i = 0; i < n; ++i) identity = identity && sigma[static_cast<std::size_t>(i)] == i + 1;
    if (identity)
      throw std::invalid_argument("the identity fixes every system; use enumerate_systems instead");
  }
  if (opts.limit && *opts.limit == 0) return 0;

  auto image = [&](const star& s) {
    std::vector<vertex> p;
    for (vertex x : s.pendants) p.push_back(sigma[static_cast<std::size_t>(x - 1)]);
    std::sort(p.begin(), p.end());
    return star(sigma[static_cast<std::size_t>(s.root - 1)], std::move(p));
  };

  const auto g = compatibility_graph(n, e);
  std::vector<char> placed(g.stars.size(), 0);
  std::vector<std::vector<star>> orbits;
  for (std::size_t i = 0; i < g.stars.size(); ++i) {
    if (placed[i]) continue;
    std::vector<star> orbit{g.stars[i]};
    placed[i] = 1;
    for (star s = image(g.stars[i]); !(s == g.stars[i]); s = image(s)) {
      placed[static_cast<std::size_t>(g.index_of(s))] = 1;
      orbit.push_back(s);
    }
    std::vector<int> cols;
    for (const star& s : orbit)
      for (const edge& x : star_edges(s)) cols.push_back(static_cast<int>(edge_index(x, n)));
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) continue;  // orbit overlaps itself
    orbits.push_back(std::move(orbit));
  }
  if (opts.seed) {
    std::mt19937_64 rng(splitmix(opts.seed));
    std::shuffle(orbits.begin(), orbits.end(), rng);
  }

  exact_cover dlx(n * (n - 1) / 2);
  for (const auto& orbit : orbits) {
    std::vector<int> cols;
    for (const star& s : orbit)
      for (const edge& x : star_edges(s)) cols.push_back(static_cast<int>(edge_index(x, n)));
    dlx.add_row(cols);
  }
  std::size_t emitted = 0;
  dlx.solve([&](const std::vector<int>& rows) {
    std::vector<star> blocks;
    for (int r : rows) {
      const auto& orbit = orbits[static_cast<std::size_t>(r)];
      blocks.insert(blocks.end(), orbit.begin(), orbit.end());
    }
    ++emitted;
    if (!sink(make_system(n, e, std::move(blocks)))) return false;
    return !(opts.limit && emitted >= *opts.limit);
  });
  return emitted;
}

census_report census(const std::vector<star_system>& systems, budget per_system, unsigned threads) {
  census_report r;
  r.mode = "list";
  const auto start = clock_type::now();
  if (!systems.empty()) {
    r.n = systems.front().n;
    r.e = systems.front().e;
  }
  for (const auto& s : systems)
    if (s.n != r.n || s.e != r.e) r.n = r.e = 0;

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= systems.size()) return;
      try {
        const auto res = chromatic_index(systems[i], per_system);
        std::lock_guard lock(mu);
        if (res.exact()) {
          ++r.histogram[res.chi];
          ++r.total;
        } else {
          ++r.timeouts;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(systems.size());
      }
    }
  };
  const unsigned workers =
      std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(systems.size(), 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  r.runtime_seconds = std::chrono::duration<double>(clock_type::now() - start).count();
  return r;
}

std::string to_text(const census_report& r) {
  std::ostringstream os;
  const std::string head = "Chromatic index";
  os << head << " | Number of systems\n";
  os << std::string(head.size(), '-') << "-+-" << std::string(17, '-') << '\n';
  for (auto [chi, count] : r.histogram) {
    std::string c = std::to_string(chi);
    os << std::string(head.size() - c.size(), ' ') << c << " | " << count << '\n';
  }
  os << "total=" << r.total << " timeouts=" << r.timeouts << " n=" << r.n << " e=" << r.e
     << " mode=" << r.mode << " seed=" << r.seed << '\n';
  return os.str();
}

std::string to_json(const census_report& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["e"] = r.e;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["runtime_seconds"] = r.runtime_seconds;
  nlohmann::ordered_json h = nlohmann::ordered_json::object();
  for (auto [chi, count] : r.histogram) h[std::to_string(chi)] = count;
  j["histogram"] = h;
  j["total"] = r.total;
  j["timeouts"] = r.timeouts;
  return j.dump(2) + "\n";
}

namespace {

// Backtracking search for the least relabelling code.
class canonicalizer {
 public:
  explicit canonicalizer(const star_system& sys)
      : n_(sys.n), blocks_(sys.blocks),
        owner_(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1), -1),
        outdeg_(static_cast<std::size_t>(n_) + 1, 0), label_(static_cast<std::size_t>(n_) + 1, 0) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const star& s = blocks_[b];
      ++outdeg_[static_cast<std::size_t>(s.root)];
      for (vertex p : s.pendants) {
        owner_[cell(s.root, p)] = static_cast<int>(b);
        owner_[cell(p, s.root)] = static_cast<int>(b);
      }
    }
    at_.assign(static_cast<std::size_t>(n_) + 1, 0);
  }

  void run() {
    code_.clear();
    best_.clear();
    rec(1);
  }

  const std::vector<int>& best_code() const { return best_; }
  const std::vector<vertex>& best_labels() const { return best_label_; }

 private:
  std::size_t cell(vertex a, vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(b);
  }

  // Segment for giving label j to v, with labels 1..j-1 already placed.
  void segment(vertex v, int j, std::vector<int>& out) {
    out.clear();
    out.push_back(outdeg_[static_cast<std::size_t>(v)]);
    label_[static_cast<std::size_t>(v)] = j;
    for (int i = 1; i < j; ++i) {
      const vertex w = at_[static_cast<std::size_t>(i)];
      const star& b = blocks_[static_cast<std::size_t>(owner_[cell(v, w)])];
      int least = INT_MAX;
      for (vertex p : b.pendants) {
        const int l = label_[static_cast<std::size_t>(p)];
        if (l && l < least) least = l;
      }
      out.push_back((b.root == w ? 0 : n_ + 1) + least);
    }
    label_[static_cast<std::size_t>(v)] = 0;
  }

  void rec(int j) {
    if (j > n_) {
      if (best_.empty() || code_ < best_) {
        best_ = code_;
        best_label_ = label_;
      }
      return;
    }
    std::vector<int> seg, least;
    std::vector<vertex> ties;
    for (vertex v = 1; v <= n_; ++v) {
      if (label_[static_cast<std::size_t>(v)]) continue;
      segment(v, j, seg);
      if (ties.empty() || seg < least) {
        least = seg;
        ties.assign(1, v);
      } else if (seg == least) {
        ties.push_back(v);
      }
    }
    const std::size_t offset = code_.size();
    code_.insert(code_.end(), least.begin(), least.end());
    for (vertex v : ties) {
      if (!best_.empty() &&
          std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(code_.size()),
                                       code_.begin(), code_.end()))
        break;
      label_[static_cast<std::size_t>(v)] = j;
      at_[static_cast<std::size_t>(j)] = v;
      rec(j + 1);
      label_[static_cast<std::size_t>(v)] = 0;
    }
    code_.resize(offset);
  }

  int n_;
  std::vector<star> blocks_;
  std::vector<int> owner_;   // block containing edge (a,b)
  std::vector<int> outdeg_;
  std::vector<int> label_;   // vertex -> label, 0 if unplaced
  std::vector<vertex> at_;   // label -> vertex
  std::vector<int> code_, best_;
  std::vector<int> best_label_;
};

void require_valid(const star_system& sys) {
  if (auto r = verify_system(sys); !r) throw std::invalid_argument("canonical form of an invalid system: " + r.message);
}

}  // namespace

std::vector<int> canonical_code(const star_system& sys) {
  require_valid(sys);
  canonicalizer c(sys);
  c.run();
  return c.best_code();
}

star_system canonical_form(const star_system& sys) {
  require_valid(sys);
  canonicalizer c(sys);
  c.run();
  std::vector<vertex> perm(c.best_labels().begin() + 1, c.best_labels().end());
  auto out = relabel(sys, perm);
  for (star& s : out.blocks) s = star(s.root, s.sorted_pendants());
  std::sort(out.blocks.begin(), out.blocks.end(), star_less);
  return out;
}

orbit_result orbit_representatives(int n, int e, budget time_budget, const system_sink& sink) {
  check_search_parameters(n, e);
  if (block_count(n, e) > 16)
    throw std::invalid_argument("orbit_representatives is limited to systems of at most 16 blocks");
  const auto start = clock_type::now();
  auto out_of_time = [&] {
    return time_budget && clock_type::now() - start > *time_budget;
  };

  orbit_result result;
  std::unordered_set<std::vector<int>, key_hash> seen;
  const long long blocks = block_count(n, e);
  const int lowest = static_cast<int>((blocks + n - 1) / n);
  bool stopped = false;
  for (int d = lowest; d * e <= n - 1 && !stopped; ++d) {
    cover_engine engine(n, e, d);
    for (int k = 0; k < d; ++k) {
      std::vector<vertex> p;
      for (int q = 0; q < e; ++q) p.push_back(2 + k * e + q);
      engine.apply(star(1, std::move(p)));
    }
    std::uint64_t tick = 0;
    engine.run([&](const std::vector<star>& found) {
      if ((++tick & 255) == 0 && out_of_time()) {
        result.complete = false;
        stopped = true;
        return false;
      }
      star_system sys{n, e, found};
      canonicalizer c(sys);
      c.run();
      if (!seen.insert(c.best_code()).second) return true;
      ++result.representatives;
      if (!sink(canonical_form(sys))) {
        stopped = true;
        return false;
      }
      return true;
    });
  }
  return result;
}

}  // namespace starsys
