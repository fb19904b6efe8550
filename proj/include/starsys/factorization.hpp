#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace starsys {

/// Ordered pair of 1-based group indices; `first` is the group whose
/// members act as roots in the cross-pair colour classes.
struct group_pair {
  int first = 0;
  int second = 0;
  friend bool operator==(const group_pair&, const group_pair&) = default;
};

/// (Near-)1-factorization of K_m on group indices 1..m.  factors[i] is F_{i+1};
/// missing[i], when present, is the group F_{i+1} misses.
struct pair_factorization {
  int m = 0;
  std::vector<std::vector<group_pair>> factors;
  std::vector<std::optional<int>> missing;

  /// The pair of factor `factor` (1-based) that contains `group`, if any.
  std::optional<group_pair> pair_containing(int factor, int group) const;
};

/// factor (1-based) -> group that must be first in its pair in that factor.
using orientation_constraint = std::pair<int, int>;

/// Circle method on K_m, m even: group 1 is fixed and groups 2..m rotate
/// through Z_{m-1}; F_r pairs 1 with r+1.  For m = 4 this yields
/// F_1 = {(1,2),(3,4)}, F_2 = {(1,3),(2,4)}, F_3 = {(1,4),(2,3)}.
/// Unconstrained pairs put the smaller index first.  Throws
/// std::invalid_argument for odd m, two different constraints on one factor,
/// or a constraint naming a factor or group that does not exist.
pair_factorization one_factorization(int m, const std::vector<orientation_constraint>& constraints = {});

/// Rotational near-1-factorization of K_m, m odd: F_i = { {i+k, i-k} :
/// k = 1..(m-1)/2 } on residues 1..m, so F_i misses group i.  Throws as
/// above, and also when a constraint names the group its factor misses.
pair_factorization near_one_factorization(int m, const std::vector<orientation_constraint>& constraints = {});

}  // namespace starsys
