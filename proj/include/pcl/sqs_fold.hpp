#pragma once

// Steiner quadruple systems at codewords of an extended perfect code of
// length 16, and the quotient multigraph over a subspace of the kernel.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcl/code_algebra.hpp"
#include "pcl/quadruple_set.hpp"

namespace pcl {

class FoldabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SQS(16): 140 blocks on [0,f], every triple in exactly one block.
class SqsSystem {
 public:
  explicit SqsSystem(QuadrupleSet blocks);

  const QuadrupleSet& blocks() const noexcept { return blocks_; }
  // The block through three distinct points.
  Quadruple block_of(int a, int b, int c) const;

  friend bool operator==(const SqsSystem&, const SqsSystem&) = default;

 private:
  QuadrupleSet blocks_;
  std::vector<std::uint16_t> by_triple_;  // triple mask -> block mask
};

// XOR masks of weight 4 from v to other codewords, ascending.
std::vector<std::uint16_t> distance4_masks(const Code& c, std::uint16_t v);

// Blocks = difference quadruples of v with its distance-4 neighbours.
SqsSystem sqs_of(const Code& c, Word v);

struct SqsVertex {
  int id = 0;
  std::uint16_t representative = 0;
  std::optional<std::array<int, 16>> sts_tuple;

  friend bool operator==(const SqsVertex&, const SqsVertex&) = default;
};

struct SqsEdge {
  int a = 0;  // a <= b; a == b is a loop
  int b = 0;
  QuadrupleSet quadruples;

  std::size_t multiplicity() const noexcept { return quadruples.size(); }
  bool loop() const noexcept { return a == b; }

  friend bool operator==(const SqsEdge&, const SqsEdge&) = default;
};

struct SqsGraph {
  std::vector<SqsVertex> vertices;
  std::vector<SqsEdge> edges;  // sorted by (a, b)

  const SqsEdge* edge(int a, int b) const;
  std::vector<const SqsEdge*> incident(int v) const;
  // Loops counted once.
  std::size_t vertex_sum(int v) const;
  std::vector<std::vector<std::size_t>> multiplicity_matrix() const;

  friend bool operator==(const SqsGraph&, const SqsGraph&) = default;
};

// Every member of a coset sees the same labels leading to the same cosets.
// Throws std::invalid_argument when L is not inside Ker(C).
bool foldable(const Code& c, const LinearSpan& l);

// Throws FoldabilityError if the covering check fails.
SqsGraph quotient_graph(const Code& c, const LinearSpan& l);
SqsGraph quotient_graph(const Code& c, const CosetDecomposition& cd);

bool vertex_sum_check(const SqsGraph& g);

// Collapses a graph over L to the graph over a larger subspace whose cosets
// are given by `coarse`.
SqsGraph merge_quotient(const SqsGraph& fine, const Code& c, const CosetDecomposition& coarse);

}  // namespace pcl
