#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starsys/colouring.hpp"
#include "starsys/core.hpp"
#include "starsys/graph.hpp"

namespace starsys {

/// Graph on every e-star of K_n, adjacent iff edge-disjoint.  Vertex order:
/// root ascending, then pendant set in colex order.
struct compat_graph {
  int n = 0;
  int e = 0;
  simple_graph graph;
  std::vector<star> stars;  // pendants sorted

  /// Exact inverse of `stars`; throws std::invalid_argument for a star that
  /// is not an e-star on 1..n.
  int index_of(const star& s) const;
};

/// Requires n >= 2e and n <= 64; throws std::invalid_argument otherwise.
compat_graph compatibility_graph(int n, int e);

/// Return false to stop the stream.
using system_sink = std::function<bool(const star_system&)>;

struct search_options {
  std::optional<std::size_t> limit;
  /// 0 keeps the natural branching order; other values shuffle candidates.
  std::uint64_t seed = 0;
  /// Worker count for enumerate_systems; 1 gives a fully deterministic order.
  unsigned threads = 1;
};

/// Distinct labelled S_e(n), each passing verify_system.  Exact cover with
/// edges as columns and stars as rows, branching on the uncovered edge with
/// the fewest candidate stars (ties to the lowest edge index).  Exhaustive
/// when no limit is given.  Returns the number emitted.  Throws
/// std::invalid_argument when (n, e) is inadmissible or n > 63.
std::size_t enumerate_systems(int n, int e, const search_options& opts, const system_sink& sink);
std::vector<star_system> collect_systems(int n, int e, const search_options& opts = {});

/// One system from a randomized depth-first descent that restarts with a
/// derived seed after a node budget.  Deterministic in the seed.  The
/// distribution is NOT uniform over all systems.
star_system sample_system(int n, int e, std::uint64_t seed);

/// 1-based permutation as a vector: perm[x-1] is the image of x.
using permutation = std::vector<vertex>;

/// Parses cycle notation such as "(1,2,3)(4,5)" on 1..n; fixed points may
/// be omitted.  Throws std::invalid_argument on malformed input.
permutation parse_cycles(const std::string& text, int n);

/// Systems whose block set is mapped to itself by `sigma`, found as exact
/// covers by orbits of stars under <sigma>.  Throws std::invalid_argument if
/// sigma is not a permutation of 1..n or is the identity.
std::size_t enumerate_invariant_systems(int n, int e, const permutation& sigma,
                                        const search_options& opts, const system_sink& sink);

struct census_report {
  int n = 0;
  int e = 0;
  std::string mode;
  std::uint64_t seed = 0;
  double runtime_seconds = 0;
  std::map<int, long long> histogram;  // chromatic index -> systems
  long long total = 0;                 // sum of the histogram
  long long timeouts = 0;              // systems left unresolved, not in total
};

/// chromatic_index of every system (spread over `threads` workers).  n and
/// e are those shared by all systems, or 0 when they differ.
census_report census(const std::vector<star_system>& systems, budget per_system = std::nullopt,
                     unsigned threads = 1);

/// Two-column table "chromatic index | systems".
std::string to_text(const census_report& r);
/// {"schema":1,"n","e","mode","seed","runtime_seconds","histogram","total","timeouts"}
std::string to_json(const census_report& r);

/// Lexicographically least code over all relabellings.  Label j's segment
/// holds the number of blocks rooted at j, then for each i < j the
/// direction of edge ij and the least label below or equal to j among the
/// pendants of its block that carry labels below or equal to j.  The least
/// relabelling is found by backtracking that keeps only the candidates for
/// the next label with the smallest segment.
std::vector<int> canonical_code(const star_system& sys);

/// The relabelling of sys achieving canonical_code, blocks sorted.
star_system canonical_form(const star_system& sys);

struct orbit_result {
  std::size_t representatives = 0;
  bool complete = true;
};

/// One canonical representative per isomorphism class of S_e(n), emitted
/// in discovery order.  Generation fixes vertex 1 as a vertex with the most
/// blocks, with blocks {1;2..e+1}, {1;e+2..2e+1}, ..., and bounds every
/// other vertex by that count; canonical forms are deduplicated in a
/// seen-set.  Stops early with complete = false when the wall-clock budget
/// runs out.  Requires block_count(n, e) <= 16.
orbit_result orbit_representatives(int n, int e, budget time_budget, const system_sink& sink);

}  // namespace starsys
