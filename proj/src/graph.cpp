#include "starsys/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "starsys/format.hpp"

namespace starsys {

simple_graph::simple_graph(int vertex_count)
    : n_(vertex_count), words_((static_cast<std::size_t>(vertex_count) + 63) / 64) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

std::size_t simple_graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

void simple_graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge end out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  rows_[idx(u) * words_ + idx(v) / 64] |= std::uint64_t{1} << (v % 64);
  rows_[idx(v) * words_ + idx(u) / 64] |= std::uint64_t{1} << (u % 64);
}

int simple_graph::degree(int v) const {
  int d = 0;
  const auto* r = row(v);
  for (std::size_t i = 0; i < words_; ++i) d += std::popcount(r[i]);
  return d;
}

std::vector<int> simple_graph::neighbours(int v) const {
  std::vector<int> out;
  const auto* r = row(v);
  for (std::size_t i = 0; i < words_; ++i)
    for (auto w = r[i]; w; w &= w - 1)
      out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  return out;
}

simple_graph simple_graph::complement() const {
  simple_graph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

simple_graph complete_graph(int n) {
  simple_graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::string to_dimacs(const simple_graph& g, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

simple_graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  simple_graph g;
  bool have_header = false;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nv = 0, ne = 0;
      if (!(ls >> kind >> nv >> ne) || (kind != "edge" && kind != "col") || nv < 0 || ne < 0)
        throw parse_error(number, "expected 'p edge N M'");
      g = simple_graph(static_cast<int>(nv));
      declared = static_cast<std::size_t>(ne);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw parse_error(number, "edge before 'p' line");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw parse_error(number, "expected 'e u v'");
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count() || u == v)
        throw parse_error(number, "bad edge endpoints");
      g.add_edge(u - 1, v - 1);
    } else {
      throw parse_error(number, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw parse_error(number, "missing 'p edge' line");
  // Some generators list each edge twice; only flag a count below the header.
  if (g.edge_count() > declared)
    throw parse_error(number, "more distinct edges than the header declares");
  return g;
}

}  // namespace starsys
