#include "starsys/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace starsys {

edge::edge(vertex a, vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge: loops are not edges of K_n");
}

std::size_t edge_index(const edge& e, int n) {
  // rows (1,*) hold n-1 edges, rows (2,*) n-2, ...
  const auto u = static_cast<std::size_t>(e.u - 1);
  const auto nn = static_cast<std::size_t>(n);
  return u * (2 * nn - u - 1) / 2 + static_cast<std::size_t>(e.v - e.u - 1);
}

edge edge_at(std::size_t index, int n) {
  vertex u = 1;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++u;
  }
  return edge(u, u + 1 + static_cast<vertex>(index));
}

star::star(vertex r, std::vector<vertex> p) : root(r), pendants(std::move(p)) {}

bool star::contains(vertex x) const {
  return root == x || std::find(pendants.begin(), pendants.end(), x) != pendants.end();
}

std::vector<vertex> star::sorted_pendants() const {
  auto p = pendants;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<vertex> star::key() const {
  std::vector<vertex> k;
  k.reserve(pendants.size() + 1);
  k.push_back(root);
  auto p = sorted_pendants();
  k.insert(k.end(), p.begin(), p.end());
  return k;
}

bool operator==(const star& a, const star& b) {
  return a.root == b.root && a.pendants.size() == b.pendants.size() &&
         a.sorted_pendants() == b.sorted_pendants();
}

bool star_less(const star& a, const star& b) { return a.key() < b.key(); }

std::vector<edge> star_edges(const star& s) {
  std::vector<edge> out;
  out.reserve(s.pendants.size());
  for (vertex p : s.pendants) out.emplace_back(s.root, p);
  return out;
}

bool vertex_disjoint(const star& a, const star& b) {
  if (a.contains(b.root)) return false;
  for (vertex p : b.pendants)
    if (a.contains(p)) return false;
  return true;
}

bool is_admissible(int n, int e) {
  if (e < 3) throw std::invalid_argument("star size must be at least 3");
  if (n < 1) throw std::invalid_argument("order must be positive");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  return n >= 2 * e && pairs % e == 0;
}

long long block_count(int n, int e) {
  if (!is_admissible(n, e)) {
    std::ostringstream os;
    os << "order " << n << " is not admissible for " << e << "-stars";
    throw std::domain_error(os.str());
  }
  return static_cast<long long>(n) * (n - 1) / (2LL * e);
}

long long lower_bound(int n, int e) {
  const long long blocks = block_count(n, e);
  const long long per_class = n / (e + 1);
  return (blocks + per_class - 1) / per_class;
}

const char* to_string(defect d) {
  switch (d) {
    case defect::none: return "none";
    case defect::bad_parameters: return "bad_parameters";
    case defect::malformed_block: return "malformed_block";
    case defect::duplicate_edge: return "duplicate_edge";
    case defect::missing_edge: return "missing_edge";
    case defect::partition_error: return "partition_error";
    case defect::duplicate_label: return "duplicate_label";
    case defect::class_conflict: return "class_conflict";
  }
  return "unknown";
}

namespace {

std::string edge_text(const edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::optional<std::string> malformation(const star& s, int n, int e) {
  auto in_range = [n](vertex x) { return x >= 1 && x <= n; };
  if (!in_range(s.root)) return "root " + std::to_string(s.root) + " outside 1.." + std::to_string(n);
  if (s.size() != e)
    return "has " + std::to_string(s.size()) + " pendants, expected " + std::to_string(e);
  for (vertex p : s.pendants) {
    if (!in_range(p)) return "pendant " + std::to_string(p) + " outside 1.." + std::to_string(n);
    if (p == s.root) return "root " + std::to_string(p) + " repeated as a pendant";
  }
  auto sorted = s.sorted_pendants();
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::string("repeated pendant");
  return std::nullopt;
}

}  // namespace

system_report verify_system(const star_system& sys) {
  system_report r;
  if (sys.n < 2 || sys.e < 1) {
    r.valid = false;
    r.kind = defect::bad_parameters;
    r.message = "need n >= 2 and e >= 1";
    return r;
  }
  for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
    if (auto why = malformation(sys.blocks[b], sys.n, sys.e)) {
      r.valid = false;
      r.kind = defect::malformed_block;
      r.block = b;
      r.message = "block " + std::to_string(b) + " " + *why;
      return r;
    }
  }

  const auto total = static_cast<std::size_t>(sys.n) * (sys.n - 1) / 2;
  std::vector<std::uint8_t> seen(total, 0);
  for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
    for (const edge& ed : star_edges(sys.blocks[b])) {
      auto& c = seen[edge_index(ed, sys.n)];
      if (c == 1 && !r.duplicate) {
        r.duplicate = ed;
        r.block = b;
      }
      if (c < 2) ++c;
    }
  }
  for (std::size_t i = 0; i < total && !r.missing; ++i)
    if (seen[i] == 0) r.missing = edge_at(i, sys.n);

  if (r.duplicate || r.missing) {
    r.valid = false;
    r.kind = r.duplicate ? defect::duplicate_edge : defect::missing_edge;
    std::ostringstream os;
    if (r.duplicate) os << "duplicate edge " << edge_text(*r.duplicate) << " in block " << *r.block;
    if (r.duplicate && r.missing) os << "; ";
    if (r.missing) os << "missing edge " << edge_text(*r.missing);
    r.message = os.str();
  }
  return r;
}

colouring_report verify_colouring(const coloured_star_system& c) {
  colouring_report r;
  r.system = verify_system(c.system);
  if (!r.system.valid) {
    r.valid = false;
    r.kind = r.system.kind;
    r.message = "underlying system invalid: " + r.system.message;
    return r;
  }

  std::unordered_set<std::string> labels;
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    if (!labels.insert(c.classes[k].label).second) {
      r.valid = false;
      r.kind = defect::duplicate_label;
      r.colour = k;
      r.message = "label '" + c.classes[k].label + "' used by more than one class";
      return r;
    }
  }

  const auto nb = c.system.blocks.size();
  std::vector<int> owner(nb, -1);
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    for (std::size_t m : c.classes[k].members) {
      if (m >= nb || owner[m] != -1) {
        r.valid = false;
        r.kind = defect::partition_error;
        r.colour = k;
        r.first_block = m;
        r.message = m >= nb ? "class '" + c.classes[k].label + "' names block " +
                                  std::to_string(m) + " which does not exist"
                            : "block " + std::to_string(m) + " lies in more than one class";
        return r;
      }
      owner[m] = static_cast<int>(k);
    }
  }
  for (std::size_t b = 0; b < nb; ++b) {
    if (owner[b] == -1) {
      r.valid = false;
      r.kind = defect::partition_error;
      r.first_block = b;
      r.message = "block " + std::to_string(b) + " has no colour";
      return r;
    }
  }

  // holder[x] = block of the current class already using vertex x
  std::vector<long long> holder(static_cast<std::size_t>(c.system.n) + 1, -1);
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    const auto& members = c.classes[k].members;
    for (std::size_t m : members) {
      const star& s = c.system.blocks[m];
      auto touch = [&](vertex x) -> bool {
        auto& h = holder[static_cast<std::size_t>(x)];
        if (h != -1) {
          r.valid = false;
          r.kind = defect::class_conflict;
          r.colour = k;
          r.first_block = static_cast<std::size_t>(h);
          r.second_block = m;
          return false;
        }
        h = static_cast<long long>(m);
        return true;
      };
      bool ok = touch(s.root);
      for (std::size_t i = 0; ok && i < s.pendants.size(); ++i) ok = touch(s.pendants[i]);
      if (!ok) {
        const star& a = c.system.blocks[*r.first_block];
        for (vertex x = 1; x <= c.system.n; ++x)
          if (a.contains(x) && s.contains(x)) r.shared.push_back(x);
        std::ostringstream os;
        os << "class '" << c.classes[k].label << "': blocks " << *r.first_block << " and " << m
           << " share vertices";
        for (vertex x : r.shared) os << ' ' << x;
        r.message = os.str();
        return r;
      }
    }
    for (std::size_t m : members) {
      const star& s = c.system.blocks[m];
      holder[static_cast<std::size_t>(s.root)] = -1;
      for (vertex p : s.pendants) holder[static_cast<std::size_t>(p)] = -1;
    }
  }
  return r;
}

star_system relabel(const star_system& sys, const std::vector<vertex>& perm) {
  if (perm.size() != static_cast<std::size_t>(sys.n))
    throw std::invalid_argument("relabel: permutation size differs from order");
  std::vector<char> hit(perm.size() + 1, 0);
  for (vertex x : perm)
    if (x < 1 || x > sys.n || hit[static_cast<std::size_t>(x)]++)
      throw std::invalid_argument("relabel: not a permutation of 1..n");
  auto map = [&](vertex x) {
    if (x < 1 || x > sys.n) throw std::invalid_argument("relabel: vertex out of range");
    return perm[static_cast<std::size_t>(x - 1)];
  };
  star_system out{sys.n, sys.e, {}};
  out.blocks.reserve(sys.blocks.size());
  for (const star& s : sys.blocks) {
    std::vector<vertex> p;
    p.reserve(s.pendants.size());
    for (vertex x : s.pendants) p.push_back(map(x));
    out.blocks.emplace_back(map(s.root), std::move(p));
  }
  return out;
}

coloured_star_system relabel(const coloured_star_system& c, const std::vector<vertex>& perm) {
  return {relabel(c.system, perm), c.classes};
}

coloured_star_system singleton_colouring(star_system sys) {
  coloured_star_system c;
  c.classes.reserve(sys.blocks.size());
  for (std::size_t b = 0; b < sys.blocks.size(); ++b)
    c.classes.push_back({"B" + std::to_string(b + 1), {b}});
  c.system = std::move(sys);
  return c;
}

std::vector<star> sorted_blocks(const star_system& sys) {
  std::vector<star> out;
  out.reserve(sys.blocks.size());
  for (const star& s : sys.blocks) out.emplace_back(s.root, s.sorted_pendants());
  std::sort(out.begin(), out.end(), star_less);
  return out;
}

bool same_block_set(const star_system& a, const star_system& b) {
  if (a.n != b.n || a.e != b.e || a.blocks.size() != b.blocks.size()) return false;
  auto x = sorted_blocks(a);
  auto y = sorted_blocks(b);
  return std::equal(x.begin(), x.end(), y.begin(),
                    [](const star& s, const star& t) { return s.key() == t.key(); });
}

}  // namespace starsys
