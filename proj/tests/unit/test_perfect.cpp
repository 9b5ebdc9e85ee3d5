#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pcl/perfect_codes.hpp"

using namespace pcl;

namespace {

// [n choose k]_2 by the product formula.
std::uint64_t gaussian_binomial(int n, int k) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1ULL << (n - i)) - 1;
    den *= (1ULL << (i + 1)) - 1;
  }
  return num / den;
}

std::uint16_t permute(std::uint16_t w, const std::array<int, 7>& p) {
  std::uint16_t out = 0;
  for (int i = 0; i < 7; ++i) {
    if ((w >> i) & 1U) out = static_cast<std::uint16_t>(out | (1U << p[static_cast<std::size_t>(i)]));
  }
  return out;
}

}  // namespace

TEST_CASE("subspace counts match the Gaussian binomial") {
  CHECK(gaussian_binomial(7, 4) == 11811);
  CHECK(enumerate_subspaces(7, 4).size() == 11811);
  CHECK(enumerate_subspaces(4, 2).size() == gaussian_binomial(4, 2));
  for (const auto& s : enumerate_subspaces(5, 2)) CHECK(is_linear(s));
}

TEST_CASE("hamming code") {
  const PerfectCode h = hamming7();
  CHECK(h.code.size() == 16);
  CHECK(is_linear(h.code));
  CHECK(min_distance(h.code) == 3);
  CHECK(is_perfect(h.code));
  CHECK(is_extended_perfect(extend_parity(h.code)));
}

TEST_CASE("coordinate orbit of the hamming code has 30 codes") {
  std::array<int, 7> p{};
  std::iota(p.begin(), p.end(), 0);
  std::set<std::vector<std::uint16_t>> seen;
  const Code h = hamming7().code;
  const auto bits = h.bits();
  do {
    std::vector<std::uint16_t> img;
    for (std::uint16_t w : bits) img.push_back(permute(w, p));
    std::sort(img.begin(), img.end());
    seen.insert(img);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(seen.size() == 30);
}

TEST_CASE("all perfect codes of length 7") {
  const auto all = enumerate_perfect7();
  CHECK(all.size() == 240);
  std::size_t with_zero = 0;
  for (const auto& c : all) {
    CHECK(is_perfect(c.code));
    if (c.code.contains(std::uint16_t{0})) {
      ++with_zero;
      CHECK(is_linear(c.code));
    }
  }
  CHECK(with_zero == 30);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const PerfectCode& a, const PerfectCode& b) { return a.code < b.code; }));
  const auto ext = enumerate_extended8();
  CHECK(ext.size() == 240);
  for (const auto& c : ext) CHECK(is_extended_perfect(c.code));
}

TEST_CASE("perfect checks reject") {
  CHECK(is_perfect(Code(3, std::vector<std::uint16_t>{0, 7})));
  CHECK_FALSE(is_perfect(Code(3, std::vector<std::uint16_t>{0, 3})));
  CHECK_THROWS(is_perfect(Code(8, std::vector<std::uint16_t>{0})));
  const Code h = hamming7().code;
  std::vector<std::uint16_t> bad(h.bits().begin(), h.bits().end());
  bad.back() ^= 1;
  CHECK_FALSE(is_perfect(Code(7, bad)));
  CHECK_FALSE(is_extended_perfect(Code(8, std::vector<std::uint16_t>{0, 3})));
}
