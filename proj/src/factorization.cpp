#include "starsys/factorization.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace starsys {

std::optional<group_pair> pair_factorization::pair_containing(int factor, int group) const {
  for (const auto& p : factors.at(static_cast<std::size_t>(factor - 1)))
    if (p.first == group || p.second == group) return p;
  return std::nullopt;
}

namespace {

std::map<int, int> constraint_map(int factors, int m,
                                  const std::vector<orientation_constraint>& constraints) {
  std::map<int, int> first_of;
  for (auto [factor, group] : constraints) {
    if (factor < 1 || factor > factors)
      throw std::invalid_argument("orientation constraint names factor " + std::to_string(factor) +
                                  " of " + std::to_string(factors));
    if (group < 1 || group > m)
      throw std::invalid_argument("orientation constraint names group " + std::to_string(group));
    auto [it, fresh] = first_of.try_emplace(factor, group);
    if (!fresh && it->second != group)
      throw std::invalid_argument("conflicting orientation constraints on factor " +
                                  std::to_string(factor));
  }
  return first_of;
}

void orient(pair_factorization& f, const std::map<int, int>& first_of) {
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const int factor = static_cast<int>(i) + 1;
    auto want = first_of.find(factor);
    bool placed = want == first_of.end();
    for (auto& p : f.factors[i]) {
      if (p.first > p.second) std::swap(p.first, p.second);
      if (!placed && (p.first == want->second || p.second == want->second)) {
        if (p.second == want->second) std::swap(p.first, p.second);
        placed = true;
      }
    }
    if (!placed)
      throw std::invalid_argument("group " + std::to_string(want->second) +
                                  " does not occur in factor " + std::to_string(factor));
  }
}

}  // namespace

pair_factorization one_factorization(int m, const std::vector<orientation_constraint>& constraints) {
  if (m < 2 || m % 2) throw std::invalid_argument("one_factorization needs an even m >= 2");
  const auto first_of = constraint_map(m - 1, m, constraints);

  pair_factorization f;
  f.m = m;
  const int q = m - 1;  // residues 0..q-1 stand for groups 2..m
  auto group = [q](int residue) { return ((residue % q) + q) % q + 2; };
  for (int r = 0; r < q; ++r) {
    std::vector<group_pair> factor{{1, group(r)}};
    for (int k = 1; k <= (m - 2) / 2; ++k) factor.push_back({group(r + k), group(r - k)});
    f.factors.push_back(std::move(factor));
    f.missing.emplace_back(std::nullopt);
  }
  orient(f, first_of);
  return f;
}

pair_factorization near_one_factorization(int m, const std::vector<orientation_constraint>& constraints) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("near_one_factorization needs an odd m >= 3");
  const auto first_of = constraint_map(m, m, constraints);

  pair_factorization f;
  f.m = m;
  auto group = [m](int residue) { return ((residue % m) + m) % m + 1; };
  for (int i = 0; i < m; ++i) {
    std::vector<group_pair> factor;
    for (int k = 1; k <= (m - 1) / 2; ++k) factor.push_back({group(i + k), group(i - k)});
    f.factors.push_back(std::move(factor));
    f.missing.emplace_back(i + 1);
  }
  for (auto [factor, grp] : first_of)
    if (f.missing[static_cast<std::size_t>(factor - 1)] == grp)
      throw std::invalid_argument("group " + std::to_string(grp) + " is the missing point of factor " +
                                  std::to_string(factor));
  orient(f, first_of);
  return f;
}

}  // namespace starsys
