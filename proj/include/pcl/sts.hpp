#pragma once

// Steiner triple systems of order 15 from punctured codes, Pasch counts and
// type identification.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcl/code_algebra.hpp"
#include "pcl/sqs_fold.hpp"

namespace pcl {

using Triple = std::array<std::uint8_t, 3>;

class UnknownStsType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// STS(15): 35 triples on [0,14], every pair in exactly one triple.
class StsSystem {
 public:
  explicit StsSystem(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  // Third point of the triple through a and b.
  int third(int a, int b) const { return third_[static_cast<std::size_t>(a * 15 + b)]; }
  // Points relabelled by perm (perm[i] = new label of i).
  StsSystem relabel(const std::array<int, 15>& perm) const;

  friend bool operator==(const StsSystem& a, const StsSystem& b) { return a.triples_ == b.triples_; }

 private:
  std::vector<Triple> triples_;  // each ascending, list sorted
  std::array<std::int8_t, 225> third_{};
};

struct PaschProfile {
  int total = 0;
  std::array<int, 15> per_point{};  // nonincreasing

  // "33(18,18,18,12,...)"
  std::string str() const;
  friend bool operator==(const PaschProfile&, const PaschProfile&) = default;
};

struct StsTypeRow {
  int id;
  PaschProfile profile;
};

// Triples of coordinates where v and its distance-3 neighbours differ.
StsSystem sts_of(const Code& c15, Word v);
// Blocks through `point`, point removed and higher labels shifted down.
StsSystem derived_sts(const SqsSystem& s, int point);

// Pair-indexed completion search.
PaschProfile pasch_profile(const StsSystem& s);
// All 4-subsets of triples spanning exactly six points.
PaschProfile pasch_profile_exhaustive(const StsSystem& s);

const std::vector<StsTypeRow>& sts_type_table();
std::optional<int> classify_type(const PaschProfile& p);
// Throws UnknownStsType.
int sts_type(const StsSystem& s);

// 1..9 as digits, 13/14/16 as c/d/g.
char type_letter(int id);
std::string render_tuple(const std::array<int, 16>& tuple);

// Type of sts_of(puncture(C,i), puncture(rep,i)) for each coordinate i.
std::array<int, 16> class_type_tuple(const Code& c16, Word rep);

// One tuple per coset of cd. Also checks that every member of a coset has
// the same SQS (hence the same tuple); throws std::logic_error otherwise.
std::vector<std::array<int, 16>> vertex_type_tuples(const Code& c16, const CosetDecomposition& cd);

struct Homogeneity {
  bool sqs_homogeneous = false;
  bool sts_homogeneous = false;
};

Homogeneity homogeneity(const std::vector<std::array<int, 16>>& tuples);
Homogeneity homogeneity(const Code& c16);

// Random STS(15) by hill climbing.
StsSystem random_sts(std::uint64_t seed);

}  // namespace pcl
