#include "pcl/code_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace pcl {

namespace {

void require_zero(const Code& c, const char* who) {
  if (!c.contains(std::uint16_t{0})) throw std::invalid_argument(std::string(who) + ": code must contain 0 (normalize first)");
}

bool stabilizes(const Code& c, std::uint16_t x) {
  for (std::uint16_t w : c.bits()) {
    if (!c.contains(static_cast<std::uint16_t>(w ^ x))) return false;
  }
  return true;
}

}  // namespace

LinearSpan::LinearSpan(int length, std::span<const std::uint16_t> generators) : length_(length) {
  for (std::uint16_t g : generators) {
    const std::uint16_t r = reduce(g);
    if (r == 0) continue;
    const auto lead = static_cast<std::uint16_t>(std::bit_floor(r));
    for (auto& b : basis_) {
      if (b & lead) b ^= r;
    }
    auto pos = std::find_if(pivots_.begin(), pivots_.end(), [&](std::uint16_t p) { return p < lead; });
    const auto at = pos - pivots_.begin();
    basis_.insert(basis_.begin() + at, r);
    pivots_.insert(pos, lead);
  }
}

std::uint16_t LinearSpan::reduce(std::uint16_t w) const noexcept {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (w & pivots_[i]) w ^= basis_[i];
  }
  return w;
}

std::vector<std::uint16_t> LinearSpan::elements() const {
  std::vector<std::uint16_t> out{0};
  for (std::uint16_t b : basis_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint16_t>(out[i] ^ b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LinearSpan::subspace_of(const LinearSpan& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](std::uint16_t b) { return other.contains(b); });
}

LinearSpan kernel(const Code& c) {
  require_zero(c, "kernel");
  std::vector<std::uint16_t> ker;
  for (std::uint16_t x : c.bits()) {
    if (stabilizes(c, x)) ker.push_back(x);
  }
  LinearSpan span(c.length(), ker);
  // The stabilizer of a set is a group; check rather than assume.
  if (span.size() != ker.size()) throw std::logic_error("kernel is not closed under addition");
  return span;
}

int rank(const Code& c) {
  require_zero(c, "rank");
  return LinearSpan(c.length(), c.bits()).dimension();
}

int CosetDecomposition::index_of(const Code& c, std::uint16_t w) const {
  return coset_of[c.index_of(w)];
}

CosetDecomposition cosets(const Code& c, const LinearSpan& l) {
  for (std::uint16_t b : l.basis()) {
    if (!stabilizes(c, b)) throw std::invalid_argument("cosets: subspace is not contained in the kernel");
  }
  std::map<std::uint16_t, std::uint16_t> least;  // reduced key -> least member
  for (std::uint16_t w : c.bits()) {
    auto [it, fresh] = least.emplace(l.reduce(w), w);
    if (!fresh) it->second = std::min(it->second, w);
  }
  CosetDecomposition out;
  out.subspace = l;
  for (const auto& kv : least) out.representatives.push_back(kv.second);
  std::sort(out.representatives.begin(), out.representatives.end());
  std::map<std::uint16_t, int> index;
  for (std::size_t i = 0; i < out.representatives.size(); ++i) {
    index.emplace(l.reduce(out.representatives[i]), static_cast<int>(i));
  }
  out.coset_of.reserve(c.size());
  for (std::uint16_t w : c.bits()) out.coset_of.push_back(index.at(l.reduce(w)));
  if (out.count() * l.size() != c.size()) throw std::logic_error("cosets: sizes do not divide evenly");
  return out;
}

std::vector<LinearSpan> index2_subspaces(const LinearSpan& k) {
  const int d = k.dimension();
  if (d < 1) throw std::invalid_argument("index2_subspaces: dimension must be at least 1");
  if (d > 16) throw std::invalid_argument("index2_subspaces: dimension too large");
  const auto& basis = k.basis();
  std::vector<LinearSpan> out;
  out.reserve((std::size_t{1} << d) - 1);
  for (unsigned f = 1; f < (1U << d); ++f) {
    const int j = std::countr_zero(f);
    std::vector<std::uint16_t> gens;
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      const std::uint16_t b = basis[static_cast<std::size_t>(i)];
      gens.push_back((f >> i) & 1U ? static_cast<std::uint16_t>(b ^ basis[static_cast<std::size_t>(j)]) : b);
    }
    out.emplace_back(k.length(), gens);
  }
  return out;
}

}  // namespace pcl
