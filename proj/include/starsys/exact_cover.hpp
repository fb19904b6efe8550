#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace starsys {

/// Dancing-links exact cover over columns 0..columns-1.  Every column is
/// primary.  Column selection is minimum remaining rows, ties to the lowest
/// column index, so the solution order is fully determined by row order.
class exact_cover {
 public:
  explicit exact_cover(int columns);

  /// Adds a row covering the given columns; returns its index.  Throws
  /// std::invalid_argument on an empty row, a repeated column, or a column
  /// out of range.
  int add_row(const std::vector<int>& columns);

  int column_count() const { return columns_; }
  int row_count() const { return static_cast<int>(row_head_.size()); }

  /// Calls `sink` with the row indices of each solution; stop by returning
  /// false.  Returns the number of solutions reported.  May be called more
  /// than once.
  std::size_t solve(const std::function<bool(const std::vector<int>&)>& sink);

 private:
  struct node {
    int left, right, up, down, column, row;
  };

  void cover(int c);
  void uncover(int c);
  bool search(const std::function<bool(const std::vector<int>&)>& sink, std::size_t& found);

  int columns_;
  std::vector<node> nodes_;  // 0 is the root, 1..columns_ are column headers
  std::vector<int> size_;
  std::vector<int> row_head_;
  std::vector<int> partial_;
};

}  // namespace starsys
