#pragma once

// Structural checks of SQS-graphs over the kernel for kernel dimension 5..9:
// loop multiplicities and families, intra-half links, and the decomposition
// of cross links into products and lexicographically ordered quarters.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcl/fano.hpp"
#include "pcl/sqs_fold.hpp"

namespace pcl {

class KappaRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Ordered: exact > relabeled > spectrum_only > fail.
enum class Verdict { fail = 0, spectrum_only = 1, relabeled = 2, exact = 3 };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

// Expected loop size per kernel dimension: 44, 28, 21, 17, 15 for 9..5.
std::size_t expected_loop_multiplicity(int kappa);
// Expected loop family name: "XYZ+product", "XYZ", "X'", "Z'", "Z_0".
std::string expected_loop_family(int kappa);
// Named intra-half families expected at each vertex (empty for kappa >= 8).
std::vector<std::string> expected_intra_families(int kappa);

// Half-preserving relabeling: perm[i] is the new coordinate of i. When
// `swapped` is set the halves were exchanged before permuting.
struct Relabeling {
  std::array<int, 16> perm{};
  bool swapped = false;
};

struct LoopVerdict {
  int vertex = 0;
  std::size_t multiplicity = 0;
  std::size_t expected = 0;
  Verdict verdict = Verdict::fail;
  QuadrupleSet observed;
  std::optional<std::pair<PairPartition, PairPartition>> product;  // kappa 9 only
  std::string note;
};

struct LinkVerdict {
  int a = 0;
  int b = 0;
  std::size_t multiplicity = 0;
  Verdict verdict = Verdict::fail;
  std::vector<std::string> intra_families;  // names matched by the intra part
  std::size_t intra = 0;                     // quadruples inside one half
  std::size_t cross = 0;                     // quadruples split 2+2
  std::vector<std::pair<PairPartition, PairPartition>> products;
  std::vector<Quarter> quarters;
  std::string note;
};

// kappa 9: a hyperplane L of K over which the loop drops to 28 and the
// missing product becomes an edge between the two halves of each K-coset.
struct IndexTwoCheck {
  bool found = false;
  int dimension = 0;
  std::size_t loop = 0;
  std::size_t product_edge = 0;
  bool merge_matches = false;
};

struct StructureReport {
  int kappa = 0;
  std::size_t vertices = 0;
  std::vector<LoopVerdict> loops;
  std::vector<LinkVerdict> links;  // non-loop edges
  std::vector<std::vector<std::size_t>> multiplicity;
  bool vertex_sums = false;
  std::vector<std::size_t> cross_totals;      // per vertex, expected 112
  std::vector<std::size_t> products_per_vertex;  // per vertex, expected 7
  std::optional<Relabeling> relabeling;
  std::optional<IndexTwoCheck> index_two;
  Verdict loop_level = Verdict::fail;
  Verdict intra_level = Verdict::fail;
  Verdict cross_level = Verdict::fail;
  Verdict overall = Verdict::fail;
  bool pass = false;  // no fail verdict anywhere
  std::vector<std::string> notes;
};

// Kernel dimension of a graph over the kernel: 11 - log2(#vertices).
int kappa_of_graph(const SqsGraph& g);

// Loop check, trying the identity first and then a relabeling search.
std::vector<LoopVerdict> verify_loops(const SqsGraph& g, int kappa, std::optional<Relabeling>* found = nullptr);
std::vector<LinkVerdict> verify_intra_links(const SqsGraph& g, int kappa, const std::optional<Relabeling>& r);
std::vector<LinkVerdict> verify_cross_links(const SqsGraph& g, int kappa);

// All checks on a graph over the kernel.
StructureReport report_from_graph(const SqsGraph& g, int kappa);

// Normalizes, builds the graph over the kernel (and over a hyperplane for
// kappa 9) and runs every check. Throws KappaRangeError outside [5,9].
StructureReport full_report(const Code& c);

}  // namespace pcl
