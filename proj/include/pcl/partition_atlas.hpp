#pragma once

// Partitions of F_2^7 into perfect codes and of the even-weight space of F_2^8
// into extended perfect codes, with equivalence classification.
//
// Equivalence for length 7: coordinate permutation followed by any
// translation. For length 8: coordinate permutation followed by an even-weight
// translation. Component order is ignored.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcl/words.hpp"

namespace pcl {

enum class PartitionKind { perfect7, extended8 };

// Throws std::invalid_argument unless the eight codes are (extended) perfect,
// pairwise disjoint and cover the ambient space.
void validate_partition(const std::array<Code, 8>& parts, PartitionKind kind);

template <PartitionKind K>
class Partition {
 public:
  static constexpr PartitionKind kKind = K;
  static constexpr int kLength = K == PartitionKind::perfect7 ? 7 : 8;

  explicit Partition(std::array<Code, 8> parts) : parts_(std::move(parts)) { validate_partition(parts_, K); }

  const Code& operator[](std::size_t i) const { return parts_[i]; }
  const std::array<Code, 8>& parts() const noexcept { return parts_; }

  // Index of the component containing w, or -1 when w is outside the ambient.
  int class_of(std::uint16_t w) const {
    for (std::size_t i = 0; i < 8; ++i) {
      if (parts_[i].contains(w)) return static_cast<int>(i);
    }
    return -1;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::array<Code, 8> parts_;
};

using PerfectPartition = Partition<PartitionKind::perfect7>;
using ExtendedPartition = Partition<PartitionKind::extended8>;

// Exact-cover enumeration; each unordered partition once, components sorted.
std::vector<PerfectPartition> enumerate_partitions7();
std::vector<ExtendedPartition> enumerate_partitions8();

// The eight cosets of the linear code, sorted.
PerfectPartition hamming_coset_partition();
ExtendedPartition extended_hamming_coset_partition();

ExtendedPartition extend_partition(const PerfectPartition& p);
PerfectPartition puncture_partition(const ExtendedPartition& p);

// Component order normalized to the canonical code order.
PerfectPartition sorted_components(const PerfectPartition& p);
ExtendedPartition sorted_components(const ExtendedPartition& p);

// Image under w -> perm(w) ^ t. perm[i] is the new position of coordinate i.
PerfectPartition transform(const PerfectPartition& p, std::span<const int> perm, std::uint16_t t);
ExtendedPartition transform(const ExtendedPartition& p, std::span<const int> perm, std::uint16_t t);

// Minimal image over the equivalence group, as 128 bytes: components in order
// of their least word, each listed ascending.
std::string canonical_form(const PerfectPartition& p);
std::string canonical_form(const ExtendedPartition& p);

// Inverse of the byte layout above.
std::array<Code, 8> decode_canonical(const std::string& form, PartitionKind kind);

struct PartitionClass {
  int id = 0;
  std::optional<std::string> alias;
  std::string canonical;
  std::array<Code, 8> representative;
  std::size_t orbit_size = 0;  // size of the full orbit under the group
  std::size_t members = 0;     // inputs that fell into this class
};

struct Classification {
  PartitionKind kind = PartitionKind::perfect7;
  std::vector<PartitionClass> classes;  // sorted by canonical form, ids dense from 0
  std::vector<int> class_of;            // one entry per input
};

Classification classify_partitions(std::span<const PerfectPartition> parts);
Classification classify_partitions(std::span<const ExtendedPartition> parts);

// Sets aliases from an ordinal -> label map; unknown ordinals throw.
void apply_aliases(Classification& c, const std::map<int, std::string>& aliases);

// Full atlases: enumerate and classify in one go.
Classification atlas7();
Classification atlas8();

}  // namespace pcl
