#include "pcl/perfect_codes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace pcl {

namespace {

std::vector<std::uint16_t> span_of(const std::vector<std::uint16_t>& basis) {
  std::vector<std::uint16_t> out{0};
  for (std::uint16_t b : basis) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint16_t>(out[i] ^ b));
  }
  return out;
}

int min_nonzero_weight(const Code& c) {
  int best = c.length() + 1;
  for (std::uint16_t w : c.bits()) {
    if (w != 0) best = std::min(best, std::popcount(w));
  }
  return best;
}

}  // namespace

PerfectCode hamming7() {
  std::vector<std::uint16_t> words;
  for (std::uint16_t x = 0; x < 128; ++x) {
    unsigned syndrome = 0;
    for (int i = 0; i < 7; ++i) {
      if ((x >> i) & 1U) syndrome ^= static_cast<unsigned>(i + 1);
    }
    if (syndrome == 0) words.push_back(x);
  }
  return {Code(7, std::move(words)), PerfectKind::plain};
}

bool is_perfect(const Code& c) {
  const int n = c.length();
  if (n != 3 && n != 7 && n != 15) {
    throw std::invalid_argument("is_perfect: length must be 2^r-1, got " + std::to_string(n));
  }
  const std::size_t space = std::size_t{1} << n;
  if (c.size() * static_cast<std::size_t>(n + 1) != space) return false;
  std::vector<std::uint8_t> hit(space, 0);
  for (std::uint16_t w : c.bits()) {
    if (hit[w]++) return false;
    for (int i = 0; i < n; ++i) {
      if (hit[w ^ (1U << i)]++) return false;
    }
  }
  return true;
}

bool is_extended_perfect(const Code& c) {
  const int n = c.length();
  if (n != 8 && n != 16) {
    throw std::invalid_argument("is_extended_perfect: length must be 8 or 16, got " + std::to_string(n));
  }
  for (std::uint16_t w : c.bits()) {
    if (std::popcount(w) & 1) return false;
  }
  if (c.size() * static_cast<std::size_t>(n) != (std::size_t{1} << (n - 1))) return false;
  for (int i = 0; i < n; ++i) {
    const Code p = puncture(c, i);
    if (p.size() != c.size() || !is_perfect(p)) return false;
  }
  return true;
}

std::vector<Code> enumerate_subspaces(int n, int k) {
  if (n < 1 || n > kMaxLength || k < 0 || k > n) throw std::invalid_argument("enumerate_subspaces: bad n/k");
  std::vector<Code> out;
  // Pivot columns as a k-subset bitmask.
  for (unsigned pivots = 0; pivots < (1U << n); ++pivots) {
    if (std::popcount(pivots) != k) continue;
    std::vector<int> piv;
    for (int i = 0; i < n; ++i) {
      if ((pivots >> i) & 1U) piv.push_back(i);
    }
    // Free positions of row r: non-pivot coordinates after its pivot.
    std::vector<std::vector<int>> free(static_cast<std::size_t>(k));
    int total_free = 0;
    for (int r = 0; r < k; ++r) {
      for (int j = piv[static_cast<std::size_t>(r)] + 1; j < n; ++j) {
        if (!((pivots >> j) & 1U)) free[static_cast<std::size_t>(r)].push_back(j);
      }
      total_free += static_cast<int>(free[static_cast<std::size_t>(r)].size());
    }
    for (std::uint32_t assign = 0; assign < (1U << total_free); ++assign) {
      std::vector<std::uint16_t> basis;
      int bit = 0;
      for (int r = 0; r < k; ++r) {
        auto row = static_cast<std::uint16_t>(1U << piv[static_cast<std::size_t>(r)]);
        for (int j : free[static_cast<std::size_t>(r)]) {
          if ((assign >> bit++) & 1U) row = static_cast<std::uint16_t>(row | (1U << j));
        }
        basis.push_back(row);
      }
      out.emplace_back(n, span_of(basis));
    }
  }
  return out;
}

bool is_linear(const Code& c) {
  if (!c.contains(std::uint16_t{0})) return false;
  for (std::uint16_t a : c.bits()) {
    for (std::uint16_t b : c.bits()) {
      if (!c.contains(static_cast<std::uint16_t>(a ^ b))) return false;
    }
  }
  return true;
}

std::vector<PerfectCode> enumerate_perfect7() {
  std::set<Code> found;
  for (const Code& s : enumerate_subspaces(7, 4)) {
    if (min_nonzero_weight(s) < 3) continue;
    for (std::uint16_t t = 0; t < 128; ++t) found.insert(translate(s, Word(7, t)));
  }
  std::vector<PerfectCode> out;
  out.reserve(found.size());
  for (const Code& c : found) {
    if (!is_perfect(c)) throw std::logic_error("enumerate_perfect7: non-perfect candidate");
    out.push_back({c, PerfectKind::plain});
  }
  return out;
}

std::vector<PerfectCode> enumerate_extended8() {
  std::vector<PerfectCode> out;
  for (const auto& p : enumerate_perfect7()) out.push_back({extend_parity(p.code), PerfectKind::extended});
  std::sort(out.begin(), out.end(), [](const PerfectCode& a, const PerfectCode& b) { return a.code < b.code; });
  return out;
}

}  // namespace pcl
