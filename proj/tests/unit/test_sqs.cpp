#include <doctest.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcl/code_algebra.hpp"
#include "pcl/sqs_fold.hpp"

using namespace pcl;

namespace {

// Triples of [0,f] covered by the weight-4 differences at v, counted.
std::vector<int> triple_cover(const Code& c, std::uint16_t v) {
  std::vector<int> hits(65536, 0);
  for (std::uint16_t w : c.bits()) {
    const auto d = static_cast<std::uint16_t>(v ^ w);
    if (std::popcount(d) != 4) continue;
    for (int drop = 0; drop < 16; ++drop) {
      if ((d >> drop) & 1U) ++hits[static_cast<std::size_t>(d & ~(1U << drop))];
    }
  }
  return hits;
}

}  // namespace

TEST_CASE("SQS at codewords") {
  const Code c = fx::kappa_code(6);
  for (std::size_t i = 0; i < c.size(); i += 97) {
    const std::uint16_t v = c.bits()[i];
    const auto hits = triple_cover(c, v);
    std::size_t triples = 0;
    for (std::uint32_t t = 0; t < 65536; ++t) {
      if (std::popcount(t) != 3) continue;
      ++triples;
      CHECK(hits[t] == 1);
    }
    CHECK(triples == 560);
    const SqsSystem s = sqs_of(c, Word(16, v));
    CHECK(s.blocks().size() == 140);
    CHECK(distance4_masks(c, v).size() == 140);
    CHECK(s.block_of(0, 1, 2).mask() == (s.block_of(2, 0, 1).mask()));
  }
}

TEST_CASE("SQS validation") {
  const SqsSystem s = sqs_of(fx::kappa_code(8), Word(16, 0));
  auto items = s.blocks().items();
  items.pop_back();
  CHECK_THROWS(SqsSystem(QuadrupleSet(items)));
}

TEST_CASE("foldability and graphs over the kernel") {
  for (int kappa : {9, 8, 7, 6, 5}) {
    CAPTURE(kappa);
    const Code c = fx::kappa_code(kappa);
    const LinearSpan k = kernel(c);
    CHECK(foldable(c, k));
    const SqsGraph g = quotient_graph(c, k);
    CHECK(g.vertices.size() == (std::size_t{1} << (11 - kappa)));
    CHECK(vertex_sum_check(g));
    const auto m = g.multiplicity_matrix();
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(g.edge(static_cast<int>(i), static_cast<int>(i)) != nullptr);
      std::size_t row = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        CHECK(m[i][j] == m[j][i]);
        row += m[i][j];
      }
      CHECK(row == 140);
    }
    for (const auto& e : g.edges) CHECK(e.a <= e.b);
  }
}

TEST_CASE("graphs over a hyperplane merge to the graph over the kernel") {
  const Code c = fx::kappa_code(8);
  const LinearSpan k = kernel(c);
  const auto cd = cosets(c, k);
  const SqsGraph coarse = quotient_graph(c, cd);
  const auto hs = index2_subspaces(k);
  for (std::size_t i = 0; i < hs.size(); i += 50) {
    const SqsGraph fine = quotient_graph(c, hs[i]);
    CHECK(fine.vertices.size() == 16);
    CHECK(vertex_sum_check(fine));
    CHECK(merge_quotient(fine, c, cd) == coarse);
  }
}

TEST_CASE("subspaces outside the kernel are refused") {
  const Code c = fx::kappa_code(7);
  const LinearSpan k = kernel(c);
  const auto it = std::find_if(c.bits().begin(), c.bits().end(), [&](std::uint16_t w) { return !k.contains(w); });
  REQUIRE(it != c.bits().end());
  const std::vector<std::uint16_t> bad{*it};
  CHECK_THROWS_AS(foldable(c, LinearSpan(16, bad)), std::invalid_argument);
}
