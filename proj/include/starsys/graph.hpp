#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace starsys {

/// Undirected graph on 0..vertex_count()-1 with bitset adjacency rows.
/// Used both for block-intersection graphs and for the compatibility graph.
class simple_graph {
 public:
  simple_graph() = default;
  explicit simple_graph(int vertex_count);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;

  /// Throws std::invalid_argument on loops or out-of-range ends.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (rows_[idx(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }
  int degree(int v) const;
  std::vector<int> neighbours(int v) const;

  /// Raw adjacency row for v: words() 64-bit words, bit w of word i = vertex 64i+w.
  const std::uint64_t* row(int v) const { return rows_.data() + idx(v) * words_; }
  std::size_t words() const { return words_; }

  simple_graph complement() const;

  friend bool operator==(const simple_graph&, const simple_graph&) = default;

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

simple_graph complete_graph(int n);

/// DIMACS edge format: "p edge N M" then "e u v" lines (1-based), "c" comments.
std::string to_dimacs(const simple_graph& g, std::string_view comment = {});
simple_graph parse_dimacs(std::string_view text);

}  // namespace starsys
