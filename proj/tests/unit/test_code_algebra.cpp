#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcl/code_algebra.hpp"

using namespace pcl;

namespace {

// Every x in F_2^16 with x + C = C.
std::vector<std::uint16_t> brute_kernel(const Code& c) {
  std::vector<std::uint16_t> out;
  for (std::uint32_t x = 0; x < 65536; ++x) {
    bool ok = true;
    for (std::uint16_t w : c.bits()) {
      if (!c.contains(static_cast<std::uint16_t>(w ^ x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<std::uint16_t>(x));
  }
  return out;
}

int brute_rank(std::vector<std::uint16_t> v) {
  int r = 0;
  for (int bit = 15; bit >= 0; --bit) {
    auto it = std::find_if(v.begin(), v.end(), [&](std::uint16_t x) { return (x >> bit) & 1U; });
    if (it == v.end()) continue;
    const std::uint16_t p = *it;
    v.erase(it);
    for (auto& x : v)
      if ((x >> bit) & 1U) x ^= p;
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("linear span") {
  const std::vector<std::uint16_t> gens{0b0011, 0b0110, 0b0101, 0b1000};
  const LinearSpan s(4, gens);
  CHECK(s.dimension() == 3);
  CHECK(s.size() == 8);
  CHECK(s.contains(0b1011));
  CHECK_FALSE(s.contains(0b0001));
  const auto els = s.elements();
  CHECK(els.size() == 8);
  CHECK(std::is_sorted(els.begin(), els.end()));
  const std::vector<std::uint16_t> sub{0b0011};
  CHECK(LinearSpan(4, sub).subspace_of(s));
  CHECK_FALSE(s.subspace_of(LinearSpan(4, sub)));
}

TEST_CASE("kernel and rank agree with brute force") {
  for (int kappa : {9, 8, 7, 6, 5}) {
    const Code c = fx::kappa_code(kappa);
    const LinearSpan k = kernel(c);
    CHECK(k.dimension() == kappa);
    CHECK(k.elements() == brute_kernel(c));
    CHECK(rank(c) == brute_rank(std::vector<std::uint16_t>(c.bits().begin(), c.bits().end())));
  }
  CHECK_THROWS(kernel(translate(fx::kappa_code(8), Word(16, 3))));
}

TEST_CASE("cosets of the kernel") {
  const Code c = fx::kappa_code(7);
  const LinearSpan k = kernel(c);
  const CosetDecomposition cd = cosets(c, k);
  CHECK(cd.count() == 16);
  CHECK(std::is_sorted(cd.representatives.begin(), cd.representatives.end()));
  std::vector<std::size_t> sizes(cd.count());
  for (std::size_t i = 0; i < c.size(); ++i) ++sizes[static_cast<std::size_t>(cd.coset_of[i])];
  for (std::size_t s : sizes) CHECK(s == 128);
  for (std::size_t i = 0; i < cd.count(); ++i) {
    const std::uint16_t r = cd.representatives[i];
    CHECK(cd.index_of(c, r) == static_cast<int>(i));
    for (std::uint16_t x : k.elements()) {
      CHECK(cd.index_of(c, static_cast<std::uint16_t>(r ^ x)) == static_cast<int>(i));
      CHECK(r <= (r ^ x));
    }
  }
  const std::vector<std::uint16_t> outside{0x0003};
  CHECK_THROWS(cosets(c, LinearSpan(16, outside)));
}

TEST_CASE("index-two subspaces") {
  const LinearSpan k = kernel(fx::kappa_code(9));
  const auto hs = index2_subspaces(k);
  CHECK(hs.size() == 511);
  std::set<std::vector<std::uint16_t>> distinct;
  for (const auto& h : hs) {
    CHECK(h.dimension() == 8);
    CHECK(h.subspace_of(k));
    distinct.insert(h.elements());
  }
  CHECK(distinct.size() == 511);
}
