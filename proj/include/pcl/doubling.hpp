#pragma once

// Doubling: two extended partitions of length 8 and a permutation give an
// extended perfect code of length 16, C = union over i of C_i x D_sigma(i).
// The left factor sits on coordinates 0..7, the right factor on 8..f.

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "pcl/partition_atlas.hpp"

namespace pcl {

using Sigma = std::array<std::uint8_t, 8>;

Sigma identity_sigma();
// Eight distinct digits 0..7, e.g. "01234567".
Sigma parse_sigma(std::string_view text);
std::string sigma_string(const Sigma& s);
Sigma inverse(const Sigma& s);
bool is_permutation(const Sigma& s);

struct DoublingSpec {
  ExtendedPartition source;
  ExtendedPartition target;
  Sigma sigma = identity_sigma();
};

Code doubling(const DoublingSpec& spec);

// Translate by the least codeword so the result contains 0. Returns the
// translated code and the word used.
std::pair<Code, Word> normalize(const Code& c);

// Coordinates 0..7 and 8..f exchanged.
Code swap_halves(const Code& c);

}  // namespace pcl
