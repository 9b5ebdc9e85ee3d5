#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "pcl/code_algebra.hpp"
#include "pcl/theorem5.hpp"

using namespace pcl;

namespace {

Code permute_code(const Code& c, const std::array<int, 16>& perm) {
  std::vector<std::uint16_t> out;
  for (std::uint16_t w : c.bits()) {
    std::uint16_t x = 0;
    for (int i = 0; i < 16; ++i)
      if ((w >> i) & 1U) x = static_cast<std::uint16_t>(x | (1U << perm[static_cast<std::size_t>(i)]));
    out.push_back(x);
  }
  return Code(16, out);
}

SqsGraph graph_of(const Code& c) { return quotient_graph(c, kernel(c)); }

}  // namespace

TEST_CASE("expected values") {
  CHECK(expected_loop_multiplicity(9) == 44);
  CHECK(expected_loop_multiplicity(8) == 28);
  CHECK(expected_loop_multiplicity(7) == 21);
  CHECK(expected_loop_multiplicity(6) == 17);
  CHECK(expected_loop_multiplicity(5) == 15);
  CHECK_THROWS_AS(expected_loop_multiplicity(4), KappaRangeError);
  CHECK(expected_intra_families(6).size() == 3);
  CHECK(expected_intra_families(8).empty());
  CHECK(parse_verdict(verdict_name(Verdict::spectrum_only)) == Verdict::spectrum_only);
  CHECK(Verdict::exact > Verdict::relabeled);
  CHECK(Verdict::relabeled > Verdict::spectrum_only);
  CHECK(Verdict::spectrum_only > Verdict::fail);
}

TEST_CASE("linear code is out of range") {
  CHECK_THROWS_AS(full_report(fx::sp_code(0, 0, "01234567")), KappaRangeError);
}

TEST_CASE("kappa 8 and 9 codes pass") {
  for (int kappa : {9, 8}) {
    CAPTURE(kappa);
    const StructureReport r = full_report(fx::kappa_code(kappa));
    CHECK(r.kappa == kappa);
    CHECK(r.pass);
    CHECK(r.overall >= Verdict::relabeled);
    CHECK(r.vertex_sums);
    for (const auto& l : r.loops) CHECK(l.multiplicity == expected_loop_multiplicity(kappa));
    for (std::size_t t : r.cross_totals) CHECK(t == 112);
    for (std::size_t p : r.products_per_vertex) CHECK(p == 7);
    for (const auto& l : r.links) CHECK(l.products.size() == (kappa == 9 ? 2u : 1u));
    if (kappa == 9) {
      REQUIRE(r.index_two);
      CHECK(r.index_two->found);
      CHECK(r.index_two->merge_matches);
      CHECK(r.index_two->product_edge == 16);
      CHECK(r.loops[0].product);
    }
  }
}

TEST_CASE("applying the found relabeling gives an exact match") {
  const Code c = fx::kappa_code(8);
  const StructureReport r = full_report(c);
  REQUIRE(r.relabeling);
  const StructureReport e = full_report(permute_code(c, r.relabeling->perm));
  CHECK(e.overall == Verdict::exact);
  CHECK_FALSE(e.relabeling);
}

TEST_CASE("kappa 5 to 7 loop sizes differ from the expected ones") {
  // Observed loop sizes for the fixture codes; all are even because the
  // all-ones word of each half lies in the kernel.
  const std::map<int, std::size_t> observed{{7, 20}, {6, 16}, {5, 14}};
  for (const auto& [kappa, size] : observed) {
    CAPTURE(kappa);
    const StructureReport r = full_report(fx::kappa_code(kappa));
    CHECK(r.loops[0].multiplicity == size);
    CHECK(r.loop_level == Verdict::fail);
    CHECK_FALSE(r.pass);
    CHECK(r.vertex_sums);
    CHECK(kernel(fx::kappa_code(kappa)).contains(0x00ff));
  }
}

TEST_CASE("corrupted graph is located") {
  SqsGraph g = graph_of(fx::kappa_code(8));
  CHECK(kappa_of_graph(g) == 8);
  CHECK(report_from_graph(g, 8).pass);
  auto& e = g.edges[1];
  REQUIRE_FALSE(e.loop());
  auto items = e.quadruples.items();
  items.pop_back();
  e.quadruples = QuadrupleSet(items);
  const StructureReport r = report_from_graph(g, 8);
  CHECK_FALSE(r.pass);
  bool located = false;
  for (const auto& l : r.links) {
    if (l.a == e.a && l.b == e.b) located = l.verdict == Verdict::fail;
  }
  CHECK(located);
  CHECK_THROWS_AS(report_from_graph(g, 4), KappaRangeError);
}
