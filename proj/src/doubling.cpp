#include "pcl/doubling.hpp"

#include <stdexcept>

namespace pcl {

Sigma identity_sigma() { return {0, 1, 2, 3, 4, 5, 6, 7}; }

bool is_permutation(const Sigma& s) {
  unsigned seen = 0;
  for (std::uint8_t v : s) {
    if (v > 7) return false;
    seen |= 1U << v;
  }
  return seen == 0xFF;
}

Sigma parse_sigma(std::string_view text) {
  if (text.size() != 8) throw std::invalid_argument("sigma must have 8 digits: '" + std::string(text) + "'");
  Sigma s{};
  for (std::size_t i = 0; i < 8; ++i) {
    if (text[i] < '0' || text[i] > '7') throw std::invalid_argument("sigma digit out of range in '" + std::string(text) + "'");
    s[i] = static_cast<std::uint8_t>(text[i] - '0');
  }
  if (!is_permutation(s)) throw std::invalid_argument("sigma is not a permutation: '" + std::string(text) + "'");
  return s;
}

std::string sigma_string(const Sigma& s) {
  std::string out(8, '0');
  for (std::size_t i = 0; i < 8; ++i) out[i] = static_cast<char>('0' + s[i]);
  return out;
}

Sigma inverse(const Sigma& s) {
  Sigma inv{};
  for (std::size_t i = 0; i < 8; ++i) inv[s[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

Code doubling(const DoublingSpec& spec) {
  if (!is_permutation(spec.sigma)) throw std::invalid_argument("doubling: sigma is not a permutation");
  std::vector<std::uint16_t> words;
  words.reserve(2048);
  for (std::size_t i = 0; i < 8; ++i) {
    const Code& left = spec.source[i];
    const Code& right = spec.target[spec.sigma[i]];
    for (std::uint16_t x : left.bits()) {
      for (std::uint16_t y : right.bits()) words.push_back(static_cast<std::uint16_t>(x | (y << 8)));
    }
  }
  return Code(16, std::move(words));
}

std::pair<Code, Word> normalize(const Code& c) {
  if (c.empty()) throw std::invalid_argument("normalize: empty code");
  const Word t = c[0];
  if (t.bits() == 0) return {c, t};
  return {translate(c, t), t};
}

Code swap_halves(const Code& c) {
  if (c.length() != 16) throw std::invalid_argument("swap_halves: length must be 16");
  std::vector<std::uint16_t> words;
  words.reserve(c.size());
  for (std::uint16_t w : c.bits()) words.push_back(static_cast<std::uint16_t>((w >> 8) | (w << 8)));
  return Code(16, std::move(words));
}

}  // namespace pcl
