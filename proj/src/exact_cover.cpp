#include "pcl/exact_cover.hpp"

#include <bit>
#include <stdexcept>

namespace pcl {

int Bits256::count() const {
  return std::popcount(w_[0]) + std::popcount(w_[1]) + std::popcount(w_[2]) + std::popcount(w_[3]);
}

int Bits256::first() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
  }
  return -1;
}

ExactCover::ExactCover(int columns, std::vector<Bits256> rows)
    : columns_(columns), rows_(std::move(rows)), by_column_(static_cast<std::size_t>(columns)) {
  if (columns < 1 || columns > 256) throw std::invalid_argument("ExactCover: 1..256 columns");
  for (int c = 0; c < columns; ++c) all_.set(c);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (int c = 0; c < 256; ++c) {
      if (!rows_[r].test(c)) continue;
      if (c >= columns) throw std::invalid_argument("ExactCover: row uses a column out of range");
      by_column_[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
    }
  }
}

bool ExactCover::search(Bits256& covered, std::vector<int>& chosen, const Visitor& visit) const {
  if (covered == all_) return visit(chosen);
  // Column with the fewest rows still compatible with the partial cover.
  int best_col = -1;
  int best_n = 1 << 30;
  for (int c = 0; c < columns_; ++c) {
    if (covered.test(c)) continue;
    int n = 0;
    for (int r : by_column_[static_cast<std::size_t>(c)]) {
      if (!rows_[static_cast<std::size_t>(r)].intersects(covered)) ++n;
    }
    if (n < best_n) {
      best_n = n;
      best_col = c;
      if (n <= 1) break;
    }
  }
  if (best_n == 0) return true;
  for (int r : by_column_[static_cast<std::size_t>(best_col)]) {
    const Bits256& row = rows_[static_cast<std::size_t>(r)];
    if (row.intersects(covered)) continue;
    Bits256 saved = covered;
    covered |= row;
    chosen.push_back(r);
    const bool go_on = search(covered, chosen, visit);
    chosen.pop_back();
    covered = saved;
    if (!go_on) return false;
  }
  return true;
}

void ExactCover::solve(const Visitor& visit) const {
  Bits256 covered;
  std::vector<int> chosen;
  search(covered, chosen, visit);
}

void ExactCover::solve_with(int first_row, const Visitor& visit) const {
  if (first_row < 0 || static_cast<std::size_t>(first_row) >= rows_.size()) {
    throw std::out_of_range("ExactCover::solve_with: row index");
  }
  Bits256 covered = rows_[static_cast<std::size_t>(first_row)];
  std::vector<int> chosen{first_row};
  search(covered, chosen, visit);
}

std::size_t ExactCover::count() const {
  std::size_t n = 0;
  solve([&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace pcl
