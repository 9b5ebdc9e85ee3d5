#pragma once

// Kernel, rank and coset machinery for binary codes up to length 16.

#include <vector>

#include "pcl/words.hpp"

namespace pcl {

class LinearSpan {
 public:
  LinearSpan() = default;
  // Spans the given generators; dependent ones are dropped.
  LinearSpan(int length, std::span<const std::uint16_t> generators);

  int length() const noexcept { return length_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  std::size_t size() const noexcept { return std::size_t{1} << basis_.size(); }
  // Reduced echelon basis, ordered by decreasing leading bit.
  const std::vector<std::uint16_t>& basis() const noexcept { return basis_; }

  bool contains(std::uint16_t w) const noexcept { return reduce(w) == 0; }
  // Canonical representative of w + span: w with every pivot bit cleared.
  std::uint16_t reduce(std::uint16_t w) const noexcept;
  // All elements, ascending.
  std::vector<std::uint16_t> elements() const;
  bool subspace_of(const LinearSpan& other) const;

  friend bool operator==(const LinearSpan& a, const LinearSpan& b) {
    return a.length_ == b.length_ && a.basis_ == b.basis_;
  }

 private:
  int length_ = 0;
  std::vector<std::uint16_t> basis_;
  std::vector<std::uint16_t> pivots_;  // leading-bit mask per basis vector
};

// {x : x + C = C}. Requires 0 in C.
LinearSpan kernel(const Code& c);

// Dimension of the span of C. Requires 0 in C.
int rank(const Code& c);

struct CosetDecomposition {
  LinearSpan subspace;
  std::vector<std::uint16_t> representatives;  // least member of each coset, ascending
  std::vector<int> coset_of;                   // indexed like Code::bits()

  std::size_t count() const noexcept { return representatives.size(); }
  // Coset index of a codeword; throws if not a member of the code.
  int index_of(const Code& c, std::uint16_t w) const;
};

// Cosets of L inside C. Requires L inside Ker(C).
CosetDecomposition cosets(const Code& c, const LinearSpan& l);

// All 2^dim - 1 hyperplanes of K, one per nonzero functional on its basis.
std::vector<LinearSpan> index2_subspaces(const LinearSpan& k);

}  // namespace pcl
