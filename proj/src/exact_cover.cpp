#include "starsys/exact_cover.hpp"

#include <stdexcept>

namespace starsys {

exact_cover::exact_cover(int columns) : columns_(columns) {
  if (columns < 0) throw std::invalid_argument("exact_cover: negative column count");
  nodes_.resize(static_cast<std::size_t>(columns) + 1);
  size_.assign(static_cast<std::size_t>(columns) + 1, 0);
  for (int i = 0; i <= columns; ++i) {
    auto& h = nodes_[static_cast<std::size_t>(i)];
    h.left = i == 0 ? columns : i - 1;
    h.right = i == columns ? 0 : i + 1;
    h.up = h.down = i;
    h.column = i;
    h.row = -1;
  }
}

int exact_cover::add_row(const std::vector<int>& columns) {
  if (columns.empty()) throw std::invalid_argument("exact_cover: empty row");
  std::vector<char> seen(static_cast<std::size_t>(columns_), 0);
  for (int c : columns) {
    if (c < 0 || c >= columns_) throw std::invalid_argument("exact_cover: column out of range");
    if (seen[static_cast<std::size_t>(c)]++) throw std::invalid_argument("exact_cover: repeated column");
  }
  const int row = row_count();
  const int first = static_cast<int>(nodes_.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const int c = columns[k] + 1;
    const int id = static_cast<int>(nodes_.size());
    node x{};
    x.column = c;
    x.row = row;
    x.down = c;
    x.up = nodes_[static_cast<std::size_t>(c)].up;
    x.left = k == 0 ? id : id - 1;
    x.right = first;
    nodes_.push_back(x);
    nodes_[static_cast<std::size_t>(x.up)].down = id;
    nodes_[static_cast<std::size_t>(c)].up = id;
    if (k > 0) nodes_[static_cast<std::size_t>(id - 1)].right = id;
    nodes_[static_cast<std::size_t>(first)].left = id;
    ++size_[static_cast<std::size_t>(c)];
  }
  row_head_.push_back(first);
  return row;
}

void exact_cover::cover(int c) {
  auto& n = nodes_;
  auto at = [&](int i) -> node& { return n[static_cast<std::size_t>(i)]; };
  at(at(c).right).left = at(c).left;
  at(at(c).left).right = at(c).right;
  for (int i = at(c).down; i != c; i = at(i).down)
    for (int j = at(i).right; j != i; j = at(j).right) {
      at(at(j).down).up = at(j).up;
      at(at(j).up).down = at(j).down;
      --size_[static_cast<std::size_t>(at(j).column)];
    }
}

void exact_cover::uncover(int c) {
  auto& n = nodes_;
  auto at = [&](int i) -> node& { return n[static_cast<std::size_t>(i)]; };
  for (int i = at(c).up; i != c; i = at(i).up)
    for (int j = at(i).left; j != i; j = at(j).left) {
      ++size_[static_cast<std::size_t>(at(j).column)];
      at(at(j).down).up = j;
      at(at(j).up).down = j;
    }
  at(at(c).right).left = c;
  at(at(c).left).right = c;
}

bool exact_cover::search(const std::function<bool(const std::vector<int>&)>& sink, std::size_t& found) {
  auto at = [&](int i) -> node& { return nodes_[static_cast<std::size_t>(i)]; };
  if (at(0).right == 0) {
    ++found;
    return sink(partial_);
  }
  int best = -1;
  for (int c = at(0).right; c != 0; c = at(c).right)
    if (best < 0 || size_[static_cast<std::size_t>(c)] < size_[static_cast<std::size_t>(best)]) best = c;
  if (size_[static_cast<std::size_t>(best)] == 0) return true;

  cover(best);
  bool go = true;
  for (int r = at(best).down; go && r != best; r = at(r).down) {
    partial_.push_back(at(r).row);
    for (int j = at(r).right; j != r; j = at(j).right) cover(at(j).column);
    go = search(sink, found);
    for (int j = at(r).left; j != r; j = at(j).left) uncover(at(j).column);
    partial_.pop_back();
  }
  uncover(best);
  return go;
}

std::size_t exact_cover::solve(const std::function<bool(const std::vector<int>&)>& sink) {
  std::size_t found = 0;
  partial_.clear();
  search(sink, found);
  return found;
}

}  // namespace starsys
