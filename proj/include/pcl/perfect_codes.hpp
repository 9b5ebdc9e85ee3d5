#pragma once

// 1-perfect codes of length 7 and their parity extensions.

#include <vector>

#include "pcl/words.hpp"

namespace pcl {

enum class PerfectKind { plain, extended };

struct PerfectCode {
  Code code;
  PerfectKind kind = PerfectKind::plain;

  friend bool operator==(const PerfectCode&, const PerfectCode&) = default;
};

// Linear [7,4,3] code: parity-check columns are 1..7 in binary, so column i
// (coordinate i) is i+1.
PerfectCode hamming7();

// Radius-1 balls around the codewords tile F_2^n exactly. Accepts any
// n = 2^r - 1 (3, 7, 15); other lengths throw.
bool is_perfect(const Code& c);

// Even weights and every puncture is 1-perfect. Length 8 or 16.
bool is_extended_perfect(const Code& c);

// All k-dimensional subspaces of F_2^n, one per reduced row echelon form.
std::vector<Code> enumerate_subspaces(int n, int k);

// All 240 perfect codes of length 7 in canonical order.
std::vector<PerfectCode> enumerate_perfect7();

// Parity extensions of the above: all 240 extended perfect codes of length 8.
std::vector<PerfectCode> enumerate_extended8();

// True when c contains 0 and is closed under XOR.
bool is_linear(const Code& c);

}  // namespace pcl
