#include "pcl/quadruple_set.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace pcl {

QuadrupleSet::QuadrupleSet(std::vector<Quadruple> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

QuadrupleSet QuadrupleSet::from_masks(std::span<const std::uint16_t> masks) {
  std::vector<Quadruple> out;
  out.reserve(masks.size());
  for (std::uint16_t m : masks) out.push_back(Quadruple::from_mask(m));
  return QuadrupleSet(std::move(out));
}

QuadrupleSet QuadrupleSet::parse(std::string_view text) {
  std::vector<Quadruple> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t' || text[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < text.size() && !(text[j] == ' ' || text[j] == ',' || text[j] == '\t' || text[j] == '\n')) ++j;
    if (j > i) out.push_back(Quadruple::parse(text.substr(i, j - i)));
    i = j;
  }
  return QuadrupleSet(std::move(out));
}

QuadrupleSet QuadrupleSet::parse(const std::vector<std::string>& items) {
  std::vector<Quadruple> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(Quadruple::parse(s));
  return QuadrupleSet(std::move(out));
}

bool QuadrupleSet::contains(const Quadruple& q) const {
  return std::binary_search(items_.begin(), items_.end(), q);
}

bool QuadrupleSet::subset_of(const QuadrupleSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool QuadrupleSet::disjoint(const QuadrupleSet& other) const { return (*this & other).empty(); }

std::vector<std::uint16_t> QuadrupleSet::masks() const {
  std::vector<std::uint16_t> out;
  out.reserve(items_.size());
  for (const auto& q : items_) out.push_back(q.mask());
  return out;
}

std::vector<std::string> QuadrupleSet::hex_list() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const auto& q : items_) out.push_back(q.hex());
  return out;
}

std::string QuadrupleSet::str() const {
  std::string out;
  for (const auto& q : items_) {
    if (!out.empty()) out += ' ';
    out += q.hex();
  }
  return out;
}

QuadrupleSet operator|(const QuadrupleSet& a, const QuadrupleSet& b) {
  QuadrupleSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
  return r;
}

QuadrupleSet operator&(const QuadrupleSet& a, const QuadrupleSet& b) {
  QuadrupleSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
  return r;
}

QuadrupleSet operator-(const QuadrupleSet& a, const QuadrupleSet& b) {
  QuadrupleSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
  return r;
}

QuadrupleSet relabel(const QuadrupleSet& s, std::span<const int> perm) {
  std::vector<Quadruple> out;
  out.reserve(s.size());
  for (const auto& q : s) {
    std::array<int, 4> v{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (q[i] >= perm.size()) throw std::invalid_argument("relabel: permutation too short");
      v[i] = perm[q[i]];
    }
    out.emplace_back(v[0], v[1], v[2], v[3]);
  }
  return QuadrupleSet(std::move(out));
}

}  // namespace pcl
