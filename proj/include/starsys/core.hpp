#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace starsys {

/// 1-based vertex label of K_n.
using vertex = int;

/// Canonical undirected edge, always stored with u < v.
struct edge {
  vertex u = 0;
  vertex v = 0;

  edge() = default;
  edge(vertex a, vertex b);

  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

/// Index of edge (u,v) in the row-major order (1,2),(1,3),...,(n-1,n).
std::size_t edge_index(const edge& e, int n);
edge edge_at(std::size_t index, int n);

/// One block {root; p_1,...,p_e}. Pendant order is storage order only and
/// is kept because constructions refer to pendant positions.
struct star {
  vertex root = 0;
  std::vector<vertex> pendants;

  star() = default;
  star(vertex r, std::vector<vertex> p);

  int size() const { return static_cast<int>(pendants.size()); }
  bool contains(vertex x) const;
  std::vector<vertex> sorted_pendants() const;
  /// root followed by the sorted pendants; the order-independent identity
  std::vector<vertex> key() const;

  friend bool operator==(const star& a, const star& b);
};

/// Sorts on key(); used wherever a deterministic block order is needed.
bool star_less(const star& a, const star& b);

std::vector<edge> star_edges(const star& s);

/// True when the two blocks have no vertex (root or pendant) in common.
bool vertex_disjoint(const star& a, const star& b);

struct star_system {
  int n = 0;
  int e = 0;
  std::vector<star> blocks;
};

struct colour_class {
  std::string label;
  std::vector<std::size_t> members;  // indices into system.blocks
};

struct coloured_star_system {
  star_system system;
  std::vector<colour_class> classes;
};

/// Throws std::invalid_argument for e < 3 or n < 1.
bool is_admissible(int n, int e);
/// n(n-1)/(2e); throws std::domain_error when (n,e) is not admissible.
long long block_count(int n, int e);
/// L(n,e) = ceil(block_count / floor(n/(e+1))), integer arithmetic only.
long long lower_bound(int n, int e);

enum class defect {
  none,
  bad_parameters,
  malformed_block,
  duplicate_edge,
  missing_edge,
  partition_error,
  duplicate_label,
  class_conflict,
};

const char* to_string(defect d);

/// Outcome of verify_system.  On failure the first malformed block, or the
/// first duplicated and first missing edge, are reported.
struct system_report {
  bool valid = true;
  defect kind = defect::none;
  std::optional<std::size_t> block;
  std::optional<edge> duplicate;
  std::optional<edge> missing;
  std::string message;

  explicit operator bool() const { return valid; }
};

struct colouring_report {
  bool valid = true;
  defect kind = defect::none;
  system_report system;
  std::optional<std::size_t> colour;  // offending class index
  std::optional<std::size_t> first_block;
  std::optional<std::size_t> second_block;
  std::vector<vertex> shared;  // vertices common to the offending pair
  std::string message;

  explicit operator bool() const { return valid; }
};

system_report verify_system(const star_system& sys);
colouring_report verify_colouring(const coloured_star_system& c);

/// Relabels every vertex x as perm[x-1]; perm must be a bijection of 1..n.
star_system relabel(const star_system& sys, const std::vector<vertex>& perm);
coloured_star_system relabel(const coloured_star_system& c,
                             const std::vector<vertex>& perm);

/// One singleton class per block, labelled B1, B2, ...
coloured_star_system singleton_colouring(star_system sys);

/// Block list sorted by star_less; equal systems compare equal afterwards.
std::vector<star> sorted_blocks(const star_system& sys);
bool same_block_set(const star_system& a, const star_system& b);

}  // namespace starsys
