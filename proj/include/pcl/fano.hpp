#pragma once

// Fano-plane quadruple families on [0,f], pair-partitions of [0,7], their
// products and lexicographically ordered quarters.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcl/quadruple_set.hpp"

namespace pcl {

using Pair = std::array<std::uint8_t, 2>;

// Partition of [0,7] into four pairs, each pair ascending, pairs ordered by
// their least element (so the first pair contains 0).
class PairPartition {
 public:
  // (01,23,45,67)
  PairPartition();
  explicit PairPartition(std::array<Pair, 4> pairs);

  // k_l^m: pairs (0,k), then the least unused index with l, then the least
  // unused index with m, the last pair forced.
  static PairPartition from_notation(int k, int l, int m);
  // "1_3^5" or "k_l^m" digits as a string.
  static PairPartition parse_notation(std::string_view text);

  const std::array<Pair, 4>& pairs() const noexcept { return pairs_; }
  // Bit masks of the pairs, shifted by `offset` coordinates.
  std::array<std::uint16_t, 4> masks(int offset = 0) const;
  // k_l^m of this partition.
  std::string notation() const;
  // "(01,23,45,67)"
  std::string str() const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  friend auto operator<=>(const PairPartition&, const PairPartition&) = default;

 private:
  std::array<Pair, 4> pairs_;
};

// All 105 pair-partitions of [0,7], ascending.
const std::vector<PairPartition>& all_pair_partitions();

// {s - x : x in q} for every quadruple. Throws if an index exceeds s.
QuadrupleSet supplement(const QuadrupleSet& y, int s);
// Set complement of each quadruple inside [0,7].
QuadrupleSet complement8(const QuadrupleSet& y);

// Named families: X, Y, Z, X', A, B, A', B', A_0, A_1, B_0, B_1,
// A_0', A_1', B_0', B_1', Z', Z_0.
const std::map<std::string, QuadrupleSet>& fano_families();
const QuadrupleSet& family(const std::string& name);

enum class SplitDirection { descending, ascending };

// Consecutive blocks of the sorted set (largest first when descending).
std::vector<QuadrupleSet> s_partition(const QuadrupleSet& y, const std::vector<int>& sizes, SplitDirection dir);

// Block sizes of the (kappa-5)-partition: 7 for kappa >= 8, (3,4) for 7,
// (1,2,2,2) for 6, seven 1s for 5.
std::vector<int> kappa_partition_sizes(int kappa);

// pair(a) U (pair(b) + 8) over all pair choices: 16 quadruples.
QuadrupleSet product(const PairPartition& a, const PairPartition& b);

// One left pair crossed with all four pairs of the right partition.
struct Quarter {
  Pair left{};
  PairPartition right;

  friend bool operator==(const Quarter&, const Quarter&) = default;
  friend auto operator<=>(const Quarter&, const Quarter&) = default;
};

QuadrupleSet quarter_set(const Quarter& q);

// Quarters of a product, in the lexicographic order of their left pairs.
std::array<QuadrupleSet, 4> loq_split(const QuadrupleSet& p);

struct Recognition {
  enum class Kind { product, quarter };
  Kind kind = Kind::product;
  std::optional<PairPartition> left;  // set for products
  Pair left_pair{};                   // set for quarters
  PairPartition right;
};

// Inverse of product() on 16-sets and of quarter_set() on 4-sets.
std::optional<Recognition> recognize_product(const QuadrupleSet& q);

// Splits a set of cross quadruples into quarters; none if impossible.
std::optional<std::vector<Quarter>> decompose_quarters(const QuadrupleSet& q);

// Splits a set of cross quadruples into whole products; none if impossible.
std::optional<std::vector<std::pair<PairPartition, PairPartition>>> decompose_products(const QuadrupleSet& q);

// Named pair-partitions 1_a .. 7_k.
const std::map<std::string, PairPartition>& partition_registry();
const PairPartition& registry_lookup(const std::string& name);
// Registered name of a partition, if any.
std::optional<std::string> registry_name(const PairPartition& p);

}  // namespace pcl
