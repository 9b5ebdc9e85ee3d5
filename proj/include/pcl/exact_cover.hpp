#pragma once

// Algorithm X over bitset rows. Columns are capped at 256, which covers every
// instance in this library (128 ambient words).

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace pcl {

class Bits256 {
 public:
  void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  bool intersects(const Bits256& o) const {
    return (w_[0] & o.w_[0]) | (w_[1] & o.w_[1]) | (w_[2] & o.w_[2]) | (w_[3] & o.w_[3]);
  }
  Bits256& operator|=(const Bits256& o) {
    for (std::size_t i = 0; i < 4; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits256& operator&=(const Bits256& o) {
    for (std::size_t i = 0; i < 4; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits256 operator~() const {
    Bits256 r;
    for (std::size_t i = 0; i < 4; ++i) r.w_[i] = ~w_[i];
    return r;
  }
  int count() const;
  // Lowest set bit, or -1.
  int first() const;
  bool none() const { return !(w_[0] | w_[1] | w_[2] | w_[3]); }
  friend bool operator==(const Bits256&, const Bits256&) = default;

 private:
  std::array<std::uint64_t, 4> w_{};
};

class ExactCover {
 public:
  // Return false from the visitor to stop the search.
  using Visitor = std::function<bool(const std::vector<int>& rows)>;

  ExactCover(int columns, std::vector<Bits256> rows);

  // Visits every exact cover once, rows listed in branching order.
  void solve(const Visitor& visit) const;
  std::size_t count() const;

  // Restricts the search to covers that contain the given row.
  void solve_with(int first_row, const Visitor& visit) const;

 private:
  bool search(Bits256& covered, std::vector<int>& chosen, const Visitor& visit) const;

  int columns_;
  std::vector<Bits256> rows_;
  std::vector<std::vector<int>> by_column_;
  Bits256 all_;
};

}  // namespace pcl
