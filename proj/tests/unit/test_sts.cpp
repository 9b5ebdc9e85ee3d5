#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcl/code_algebra.hpp"
#include "pcl/perfect_codes.hpp"
#include "pcl/sts.hpp"

using namespace pcl;

namespace {

Code linear16() { return fx::sp_code(0, 0, "01234567"); }

// Projective STS(15): lines of PG(3,2), points 1..15 relabelled 0..14.
StsSystem projective() {
  std::vector<Triple> t;
  for (int a = 1; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      const int c = a ^ b;
      if (c > b) t.push_back({static_cast<std::uint8_t>(a - 1), static_cast<std::uint8_t>(b - 1), static_cast<std::uint8_t>(c - 1)});
    }
  return StsSystem(t);
}

}  // namespace

TEST_CASE("type table") {
  const auto& t = sts_type_table();
  REQUIRE(t.size() == 11);
  std::vector<int> ids;
  for (const auto& r : t) {
    ids.push_back(r.id);
    CHECK(std::accumulate(r.profile.per_point.begin(), r.profile.per_point.end(), 0) == 6 * r.profile.total);
  }
  CHECK(ids == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 16});
  CHECK(t[0].profile.str() == "105(42,42,42,42,42,42,42,42,42,42,42,42,42,42,42)");
  CHECK(type_letter(13) == 'c');
  CHECK(type_letter(14) == 'd');
  CHECK(type_letter(16) == 'g');
  CHECK(type_letter(7) == '7');
  CHECK_THROWS(type_letter(10));
}

TEST_CASE("projective system has type 1") {
  const StsSystem s = projective();
  const PaschProfile p = pasch_profile(s);
  CHECK(p.total == 105);
  CHECK(classify_type(p) == 1);
  CHECK(sts_type(s) == 1);
  CHECK(p == pasch_profile_exhaustive(s));
}

TEST_CASE("Pasch counters agree on random systems") {
  std::size_t unknown = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const StsSystem s = random_sts(seed);
    const PaschProfile a = pasch_profile(s), b = pasch_profile_exhaustive(s);
    CHECK(a == b);
    std::array<int, 15> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(static_cast<unsigned>(seed));
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(pasch_profile(s.relabel(perm)) == a);
    if (!classify_type(a)) {
      ++unknown;
      CHECK_THROWS_AS(sts_type(s), UnknownStsType);
    }
  }
  CHECK(unknown > 0);
}

TEST_CASE("STS from a perfect code of length 15") {
  const Code c = puncture(linear16(), 15);
  CHECK(is_perfect(c));
  const StsSystem s = sts_of(c, Word(15, 0));
  CHECK(s.triples().size() == 35);
  CHECK(sts_type(s) == 1);
  const SqsSystem q = sqs_of(linear16(), Word(16, 0));
  CHECK(derived_sts(q, 15) == s);
}

TEST_CASE("linear code tuples") {
  const Code c = linear16();
  const auto t = class_type_tuple(c, Word(16, 0));
  CHECK(render_tuple(t) == "1111111111111111");
  const Homogeneity h = homogeneity(c);
  CHECK(h.sqs_homogeneous);
  CHECK(h.sts_homogeneous);
}

TEST_CASE("tuples of kappa 8 and 9 codes") {
  for (int kappa : {9, 8}) {
    const Code c = fx::kappa_code(kappa);
    const auto cd = cosets(c, kernel(c));
    const auto tuples = vertex_type_tuples(c, cd);
    CHECK(tuples.size() == cd.count());
    const char want = kappa == 9 ? '2' : '3';
    for (const auto& t : tuples) CHECK(render_tuple(t) == std::string(16, want));
    CHECK(homogeneity(tuples).sts_homogeneous);
  }
  const Code c6 = fx::kappa_code(6);
  const auto tuples = vertex_type_tuples(c6, cosets(c6, kernel(c6)));
  CHECK_FALSE(homogeneity(tuples).sqs_homogeneous);
}
