#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "starsys/core.hpp"
#include "starsys/factorization.hpp"

namespace starsys {

/// Raised by construct() for orders it cannot build.
class construction_error : public std::runtime_error {
 public:
  enum class kind { inadmissible, unsupported_class };
  construction_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  kind reason() const { return kind_; }

 private:
  kind kind_;
};

/// Vertex groups V_1..V_m laid out consecutively from vertex 1; the size-9
/// group (e = 3 families only) is always last.  `extension` is the extra
/// point x = n of the plus-point families.
struct group_partition {
  std::vector<std::vector<vertex>> groups;
  std::optional<vertex> extension;
};

/// Which construction family builds order n, and its colour count.
/// Families, by n mod 4e (e = 3 also by n mod 12):
///   even                       n = 4et        construct_thm_3_1
///   even-plus-point            n = 4et+1      construct_thm_3_2
///   odd                        n = 4et+2e     construct_thm_3_3
///   odd-plus-point             n = 4et+2e+1   construct_thm_3_4
///   even-with-nine             n = 12t+3      construct_thm_4_1
///   even-with-nine-plus-point  n = 12t+4      construct_thm_4_2
///   odd-with-nine              n = 12t+9      construct_thm_4_3
///   odd-with-nine-plus-point   n = 12t+10     construct_thm_4_4
struct construction_plan {
  std::string family;
  int t = 0;
  long long classes = 0;
  group_partition layout;
};

/// S_e(2e) on 1..2e: vertex 2e is a hub and 1..2e-1 are residues mod 2e-1;
/// block i is {i; 2e, i+1, ..., i+e-1}.  One singleton class per block.
coloured_star_system base_system_2e(int e);

/// The five-block S_3(6) {1;3,5,6}, {2;1,3,6}, {4;1,2,3}, {5;2,3,4}, {6;3,4,5}
/// as singleton classes B1..B5.
coloured_star_system base_s3_6();

/// The twelve-block S_3(9) whose first five blocks are base_s3_6, with the
/// eight colour classes C1..C8 (C2, C3, C6, C7 hold two blocks each).
coloured_star_system base_s3_9();

/// The 2e two-star classes on the edges between `first` (roots) and
/// `second` (pendants), both of size 2e.  Class 2r-1 pairs root position
/// 2r-1 with the first half of `second` and root 2r with the second half;
/// class 2r swaps the halves.
std::vector<std::vector<star>> cross_pair_classes(std::span<const vertex> first,
                                                  std::span<const vertex> second, int e);

/// Six three-star classes on the edges between a 6-group (roots) and a
/// 9-group split into thirds T1, T2, T3.  Classes 1-3 root at positions 1-3
/// and classes 4-6 at positions 4-6; within each half the thirds rotate.
std::vector<std::vector<star>> cross_pair_classes_6_9(std::span<const vertex> first,
                                                      std::span<const vertex> second);

coloured_star_system construct_thm_3_1(int e, int t);
coloured_star_system construct_thm_3_2(int e, int t);
coloured_star_system construct_thm_3_3(int e, int t);
coloured_star_system construct_thm_3_4(int e, int t);
coloured_star_system construct_thm_4_1(int t);
coloured_star_system construct_thm_4_2(int t);
coloured_star_system construct_thm_4_3(int t);
coloured_star_system construct_thm_4_4(int t);

/// True when some construction family covers this order.
bool is_covered(int n, int e);

/// Throws construction_error (inadmissible / unsupported_class).
construction_plan plan_construction(int n, int e);

/// Dispatches on n mod 4e (and n mod 12 for e = 3).  The result always
/// passes verify_colouring and has exactly plan_construction(n, e).classes
/// colour classes.
coloured_star_system construct(int n, int e);

}  // namespace starsys
