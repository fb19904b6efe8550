#include "starsys/colouring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace starsys {

bool is_proper(const simple_graph& g, const graph_colouring& c) {
  if (c.colour_of.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (int u = 0; u < g.vertex_count(); ++u) {
    const int cu = c.colour_of[static_cast<std::size_t>(u)];
    if (cu < 0 || cu >= c.k) return false;
    for (int v : g.neighbours(u))
      if (c.colour_of[static_cast<std::size_t>(v)] == cu) return false;
  }
  return true;
}

simple_graph block_intersection_graph(const star_system& sys) {
  if (auto r = verify_system(sys); !r)
    throw std::invalid_argument("block_intersection_graph: " + r.message);
  const int nb = static_cast<int>(sys.blocks.size());
  std::vector<std::vector<int>> at(static_cast<std::size_t>(sys.n) + 1);
  for (int b = 0; b < nb; ++b) {
    const star& s = sys.blocks[static_cast<std::size_t>(b)];
    at[static_cast<std::size_t>(s.root)].push_back(b);
    for (vertex p : s.pendants) at[static_cast<std::size_t>(p)].push_back(b);
  }
  simple_graph g(nb);
  for (const auto& list : at)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) g.add_edge(list[i], list[j]);
  return g;
}

graph_colouring greedy_colouring(const simple_graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (order.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("greedy_colouring: order is not a permutation");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("greedy_colouring: order is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }

  graph_colouring c;
  c.colour_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> blocked(static_cast<std::size_t>(n) + 1, -1);
  for (int v : order) {
    for (int w : g.neighbours(v)) {
      const int cw = c.colour_of[static_cast<std::size_t>(w)];
      if (cw >= 0) blocked[static_cast<std::size_t>(cw)] = v;
    }
    int col = 0;
    while (blocked[static_cast<std::size_t>(col)] == v) ++col;
    c.colour_of[static_cast<std::size_t>(v)] = col;
    c.k = std::max(c.k, col + 1);
  }
  return c;
}

std::vector<int> degeneracy_order(const simple_graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<int> removal;
  removal.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<std::size_t>(v)] &&
          (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
        pick = v;
    gone[static_cast<std::size_t>(pick)] = 1;
    removal.push_back(pick);
    for (int w : g.neighbours(pick))
      if (!gone[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

namespace {

using bits = std::vector<std::uint64_t>;

bits row_bits(const simple_graph& g, int v) {
  return bits(g.row(v), g.row(v) + g.words());
}

int count_and(const bits& a, const std::uint64_t* b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

bool any(const bits& a) {
  return std::any_of(a.begin(), a.end(), [](std::uint64_t w) { return w != 0; });
}

template <typename F>
void for_each_bit(const bits& a, F f) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto w = a[i]; w; w &= w - 1)
      f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
}

// Greedily grows `clique` while candidates remain, preferring the candidate
// with most candidate neighbours, then the lowest index.
void extend_clique(const simple_graph& g, std::vector<int>& clique, bits cand) {
  while (any(cand)) {
    int best = -1, best_score = -1;
    for_each_bit(cand, [&](int u) {
      const int s = count_and(cand, g.row(u));
      if (s > best_score) {
        best = u;
        best_score = s;
      }
    });
    clique.push_back(best);
    const auto* r = g.row(best);
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= r[i];
  }
}

bits common_neighbours(const simple_graph& g, const std::vector<int>& clique) {
  bits cand(g.words(), ~std::uint64_t{0});
  if (g.vertex_count() % 64)
    cand.back() = (std::uint64_t{1} << (g.vertex_count() % 64)) - 1;
  for (int v : clique) {
    const auto* r = g.row(v);
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= r[i];
  }
  return cand;
}

}  // namespace

std::vector<int> heuristic_clique(const simple_graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};

  std::vector<int> starts(static_cast<std::size_t>(n));
  std::iota(starts.begin(), starts.end(), 0);
  constexpr int start_cap = 256;
  if (n > start_cap) {
    std::stable_sort(starts.begin(), starts.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    starts.resize(64);
  }

  std::vector<int> best;
  for (int v : starts) {
    std::vector<int> c{v};
    extend_clique(g, c, row_bits(g, v));
    if (c.size() > best.size()) best = std::move(c);
  }

  // 1-swap: trade one member for an outsider adjacent to all the others, and
  // keep the trade if the result extends further.
  for (int pass = 0; pass < n; ++pass) {
    bool improved = false;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : best) in[static_cast<std::size_t>(v)] = 1;
    for (int u = 0; u < n && !improved; ++u) {
      if (in[static_cast<std::size_t>(u)]) continue;
      int missing = -1, misses = 0;
      for (int v : best)
        if (!g.adjacent(u, v)) {
          missing = v;
          ++misses;
        }
      if (misses != 1) continue;
      std::vector<int> trial;
      for (int v : best)
        if (v != missing) trial.push_back(v);
      trial.push_back(u);
      auto cand = common_neighbours(g, trial);
      for (int v : trial) cand[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (!any(cand)) continue;
      extend_clique(g, trial, std::move(cand));
      if (trial.size() > best.size()) {
        best = std::move(trial);
        improved = true;
      }
    }
    if (!improved) break;
  }
  return best;
}

int max_clique_lower_bound(const simple_graph& g) {
  return static_cast<int>(heuristic_clique(g).size());
}

namespace {

graph_colouring dsatur_greedy(const simple_graph& g) {
  const int n = g.vertex_count();
  graph_colouring c;
  c.colour_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<char>> nb_col(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> sat(static_cast<std::size_t>(n), 0), udeg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) udeg[static_cast<std::size_t>(v)] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      const auto su = static_cast<std::size_t>(u);
      if (c.colour_of[su] >= 0) continue;
      if (v < 0) { v = u; continue; }
      const auto sv = static_cast<std::size_t>(v);
      if (sat[su] > sat[sv] || (sat[su] == sat[sv] && udeg[su] > udeg[sv])) v = u;
    }
    const auto sv = static_cast<std::size_t>(v);
    int col = 0;
    while (nb_col[sv][static_cast<std::size_t>(col)]) ++col;
    c.colour_of[sv] = col;
    c.k = std::max(c.k, col + 1);
    for (int w : g.neighbours(v)) {
      const auto sw = static_cast<std::size_t>(w);
      if (!nb_col[sw][static_cast<std::size_t>(col)]) {
        nb_col[sw][static_cast<std::size_t>(col)] = 1;
        ++sat[sw];
      }
      --udeg[sw];
    }
  }
  return c;
}

class dsatur_search {
 public:
  dsatur_search(const simple_graph& g, graph_colouring incumbent, int lower,
                std::optional<std::chrono::steady_clock::time_point> deadline)
      : g_(g),
        n_(g.vertex_count()),
        best_(std::move(incumbent)),
        lower_(lower),
        deadline_(deadline),
        width_(static_cast<std::size_t>(best_.k) + 1),
        colour_(static_cast<std::size_t>(n_), -1),
        sat_(static_cast<std::size_t>(n_), 0),
        udeg_(static_cast<std::size_t>(n_), 0),
        nbc_(static_cast<std::size_t>(n_) * width_, 0) {
    adj_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      adj_.push_back(g.neighbours(v));
      udeg_[static_cast<std::size_t>(v)] = static_cast<int>(adj_.back().size());
    }
  }

  // Returns false if the deadline interrupted the search.
  bool run(const std::vector<int>& clique) {
    int used = 0;
    for (int v : clique) assign(v, used++);
    search(static_cast<int>(clique.size()), used);
    return !timed_out_;
  }

  const graph_colouring& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void assign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      const auto sw = static_cast<std::size_t>(w);
      if (nbc_[sw * width_ + static_cast<std::size_t>(c)]++ == 0) ++sat_[sw];
      --udeg_[sw];
    }
  }

  void unassign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = -1;
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      const auto sw = static_cast<std::size_t>(w);
      if (--nbc_[sw * width_ + static_cast<std::size_t>(c)] == 0) --sat_[sw];
      ++udeg_[sw];
    }
  }

  int select() const {
    int v = -1;
    for (int u = 0; u < n_; ++u) {
      const auto su = static_cast<std::size_t>(u);
      if (colour_[su] >= 0) continue;
      if (v < 0) { v = u; continue; }
      const auto sv = static_cast<std::size_t>(v);
      if (sat_[su] > sat_[sv] || (sat_[su] == sat_[sv] && udeg_[su] > udeg_[sv])) v = u;
    }
    return v;
  }

  bool out_of_time() {
    if (timed_out_) return true;
    ++nodes_;
    if (deadline_ && (nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() >= *deadline_)
      timed_out_ = true;
    return timed_out_;
  }

  bool done() const { return timed_out_ || best_.k <= lower_; }

  void search(int coloured, int used) {
    if (out_of_time()) return;
    if (coloured == n_) {
      if (used < best_.k) {
        best_.k = used;
        best_.colour_of = colour_;
      }
      return;
    }
    const int v = select();
    const auto sv = static_cast<std::size_t>(v);
    // a completed colouring must beat the incumbent, so colours stay below best-1
    const int reuse = std::min(used, best_.k - 1);
    for (int c = 0; c < reuse; ++c) {
      if (nbc_[sv * width_ + static_cast<std::size_t>(c)]) continue;
      assign(v, c);
      search(coloured + 1, used);
      unassign(v, c);
      if (done()) return;
    }
    if (used + 1 < best_.k) {
      assign(v, used);
      search(coloured + 1, used + 1);
      unassign(v, used);
    }
  }

  const simple_graph& g_;
  int n_;
  graph_colouring best_;
  int lower_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t width_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> colour_;
  std::vector<int> sat_;
  std::vector<int> udeg_;
  std::vector<int> nbc_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

chromatic_result exact_chromatic_number(const simple_graph& g, budget time_budget) {
  chromatic_result r;
  const int n = g.vertex_count();
  if (n == 0) return r;

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (time_budget)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(*time_budget);

  auto incumbent = greedy_colouring(g, degeneracy_order(g));
  if (auto ds = dsatur_greedy(g); ds.k < incumbent.k) incumbent = std::move(ds);
  const auto clique = heuristic_clique(g);
  const int lower = static_cast<int>(clique.size());

  const bool settled = incumbent.k <= lower;
  dsatur_search solver(g, std::move(incumbent), lower, deadline);
  const bool finished = settled || solver.run(clique);
  r.witness = solver.best();
  r.nodes = solver.nodes();
  r.upper = r.witness.k;
  if (finished) {
    r.status = solve_status::exact;
    r.chi = r.lower = r.upper;
  } else {
    r.status = solve_status::timeout;
    r.lower = lower;
    r.chi = r.upper;
  }
  return r;
}

chromatic_result chromatic_index(const star_system& sys, budget time_budget) {
  return exact_chromatic_number(block_intersection_graph(sys), time_budget);
}

coloured_star_system to_coloured(const star_system& sys, const graph_colouring& witness) {
  if (witness.colour_of.size() != sys.blocks.size())
    throw std::invalid_argument("to_coloured: witness does not match the block list");
  coloured_star_system c;
  c.system = sys;
  c.classes.resize(static_cast<std::size_t>(witness.k));
  for (int k = 0; k < witness.k; ++k) c.classes[static_cast<std::size_t>(k)].label = "K" + std::to_string(k + 1);
  for (std::size_t b = 0; b < sys.blocks.size(); ++b)
    c.classes.at(static_cast<std::size_t>(witness.colour_of[b])).members.push_back(b);
  std::erase_if(c.classes, [](const colour_class& cl) { return cl.members.empty(); });
  return c;
}

}  // namespace starsys
