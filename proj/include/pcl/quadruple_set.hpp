#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcl/words.hpp"

namespace pcl {

// Sorted, duplicate-free set of quadruples.
class QuadrupleSet {
 public:
  using const_iterator = std::vector<Quadruple>::const_iterator;

  QuadrupleSet() = default;
  explicit QuadrupleSet(std::vector<Quadruple> items);
  static QuadrupleSet from_masks(std::span<const std::uint16_t> masks);
  // Whitespace or comma separated hex quadruples: "0123 0145,0167".
  static QuadrupleSet parse(std::string_view text);
  static QuadrupleSet parse(const std::vector<std::string>& items);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const Quadruple& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Quadruple>& items() const noexcept { return items_; }

  bool contains(const Quadruple& q) const;
  bool subset_of(const QuadrupleSet& other) const;
  bool disjoint(const QuadrupleSet& other) const;

  std::vector<std::uint16_t> masks() const;
  std::vector<std::string> hex_list() const;
  // Space separated hex listing in lexicographic order.
  std::string str() const;

  friend QuadrupleSet operator|(const QuadrupleSet& a, const QuadrupleSet& b);
  friend QuadrupleSet operator&(const QuadrupleSet& a, const QuadrupleSet& b);
  friend QuadrupleSet operator-(const QuadrupleSet& a, const QuadrupleSet& b);

  friend bool operator==(const QuadrupleSet&, const QuadrupleSet&) = default;
  friend auto operator<=>(const QuadrupleSet&, const QuadrupleSet&) = default;

 private:
  std::vector<Quadruple> items_;
};

// Image under a coordinate map (perm[i] = new index of coordinate i).
QuadrupleSet relabel(const QuadrupleSet& s, std::span<const int> perm);

}  // namespace pcl
