#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "starsys/core.hpp"
#include "starsys/graph.hpp"

namespace starsys {

struct graph_colouring {
  std::vector<int> colour_of;  // colour of each vertex, 0..k-1
  int k = 0;
};

bool is_proper(const simple_graph& g, const graph_colouring& c);

/// One vertex per block, in block order; adjacent iff the blocks share a
/// vertex of K_n, so proper colourings are exactly block-colourings.
/// Throws std::invalid_argument if sys fails verify_system.
simple_graph block_intersection_graph(const star_system& sys);

/// Smallest available colour along order.  Throws if order is not a
/// permutation of the vertices.
graph_colouring greedy_colouring(const simple_graph& g, const std::vector<int>& order);

/// Smallest-last (degeneracy) order, lowest index first among ties.
std::vector<int> degeneracy_order(const simple_graph& g);

/// Vertices of a clique found greedily from every start vertex, followed by
/// 1-swap local improvement.  Deterministic; never larger than the clique
/// number.
std::vector<int> heuristic_clique(const simple_graph& g);
int max_clique_lower_bound(const simple_graph& g);

enum class solve_status { exact, timeout };

struct chromatic_result {
  solve_status status = solve_status::exact;
  int chi = 0;    // exact value; equals upper when status == exact
  int lower = 0;  // bracket, always lower <= chi <= upper
  int upper = 0;
  graph_colouring witness;  // proper colouring with `upper` colours
  std::uint64_t nodes = 0;

  bool exact() const { return status == solve_status::exact; }
};

using budget = std::optional<std::chrono::duration<double>>;

/// Exact chromatic number by DSATUR branch and bound.  The incumbent comes
/// from greedy colouring (degeneracy and DSATUR orders); the heuristic
/// clique gives the lower bound and is pre-coloured.  Vertex choice: largest
/// saturation, then largest uncoloured degree, then lowest index; a vertex
/// may take any used colour or exactly one new one.  When the budget runs
/// out the result carries status timeout and the current bracket.
chromatic_result exact_chromatic_number(const simple_graph& g, budget time_budget = std::nullopt);

/// exact_chromatic_number of the block-intersection graph.
chromatic_result chromatic_index(const star_system& sys, budget time_budget = std::nullopt);

/// Converts a proper colouring of the block-intersection graph into colour
/// classes labelled K1, K2, ...
coloured_star_system to_coloured(const star_system& sys, const graph_colouring& witness);

}  // namespace starsys
