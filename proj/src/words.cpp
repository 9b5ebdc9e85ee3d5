#include "pcl/words.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pcl {

namespace {

void check_length(int length) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("word length must be in [1,16], got " + std::to_string(length));
  }
}

int hex_digit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace

Word::Word(int length, std::uint32_t bits) {
  check_length(length);
  if (bits >> length) {
    throw std::invalid_argument("bit pattern exceeds word length " + std::to_string(length));
  }
  length_ = static_cast<std::uint8_t>(length);
  bits_ = static_cast<std::uint16_t>(bits);
}

Word Word::from_coordinates(int length, std::initializer_list<int> coords) {
  std::uint32_t bits = 0;
  for (int c : coords) {
    if (c < 0 || c >= length) throw std::invalid_argument("coordinate out of range");
    bits |= 1U << c;
  }
  return Word(length, bits);
}

Word Word::from_hex(int length, std::string_view hex) { return Word(length, parse_hex(hex, length)); }

Word Word::operator^(Word other) const {
  if (other.length_ != length_) throw std::invalid_argument("word length mismatch");
  Word out = *this;
  out.bits_ ^= other.bits_;
  return out;
}

std::string Word::hex() const { return hex_of(bits_, length_); }

std::string hex_of(std::uint16_t bits, int length) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = (length + 3) / 4;
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[bits & 0xF];
    bits = static_cast<std::uint16_t>(bits >> 4);
  }
  return out;
}

std::uint16_t parse_hex(std::string_view hex, int length) {
  check_length(length);
  if (hex.size() != static_cast<std::size_t>((length + 3) / 4)) {
    throw std::invalid_argument("codeword '" + std::string(hex) + "' has wrong width for length " +
                                std::to_string(length));
  }
  std::uint32_t bits = 0;
  for (char ch : hex) {
    const int d = hex_digit(ch);
    if (d < 0) throw std::invalid_argument("invalid hex digit in '" + std::string(hex) + "'");
    bits = (bits << 4) | static_cast<std::uint32_t>(d);
  }
  if (bits >> length) {
    throw std::invalid_argument("codeword '" + std::string(hex) + "' exceeds length " + std::to_string(length));
  }
  return static_cast<std::uint16_t>(bits);
}

int weight(Word w) noexcept { return std::popcount(w.bits()); }

int distance(Word v, Word w) { return weight(v ^ w); }

Quadruple::Quadruple(int a, int b, int c, int d) {
  std::array<int, 4> v{a, b, c, d};
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i] < 0 || v[i] >= kMaxLength) throw std::invalid_argument("quadruple index out of range");
    if (i > 0 && v[i] == v[i - 1]) throw std::invalid_argument("quadruple indices must be distinct");
    idx_[i] = static_cast<std::uint8_t>(v[i]);
  }
}

Quadruple Quadruple::from_mask(std::uint16_t mask) {
  if (std::popcount(mask) != 4) throw std::invalid_argument("quadruple mask must have weight 4");
  Quadruple q;
  std::size_t k = 0;
  for (int i = 0; i < kMaxLength; ++i) {
    if ((mask >> i) & 1U) q.idx_[k++] = static_cast<std::uint8_t>(i);
  }
  return q;
}

Quadruple Quadruple::parse(std::string_view text) {
  if (text.size() != 4) throw std::invalid_argument("quadruple must have 4 hex digits: '" + std::string(text) + "'");
  std::array<int, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = hex_digit(text[i]);
    if (v[i] < 0) throw std::invalid_argument("invalid quadruple '" + std::string(text) + "'");
  }
  return Quadruple(v[0], v[1], v[2], v[3]);
}

std::uint16_t Quadruple::mask() const noexcept {
  return static_cast<std::uint16_t>((1U << idx_[0]) | (1U << idx_[1]) | (1U << idx_[2]) | (1U << idx_[3]));
}

std::string Quadruple::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(4, '0');
  for (std::size_t i = 0; i < 4; ++i) out[i] = kDigits[idx_[i]];
  return out;
}

Quadruple diff_quadruple(Word v, Word w) {
  const Word d = v ^ w;
  if (weight(d) != 4) {
    throw std::invalid_argument("diff_quadruple requires distance 4, got " + std::to_string(weight(d)));
  }
  return Quadruple::from_mask(d.bits());
}

Code::Code(int length, std::vector<std::uint16_t> members) : length_(length), members_(std::move(members)) {
  check_length(length);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.back() >> length) != 0) {
    throw std::invalid_argument("codeword exceeds code length " + std::to_string(length));
  }
  occupancy_.assign(std::max<std::size_t>(1, (std::size_t{1} << length) / 64), 0);
  for (std::uint16_t w : members_) occupancy_[w >> 6] |= std::uint64_t{1} << (w & 63);
}

Code::Code(int length, std::span<const Word> members) : Code(length, [&] {
  std::vector<std::uint16_t> bits;
  bits.reserve(members.size());
  for (Word w : members) {
    if (w.length() != length) throw std::invalid_argument("word length mismatch in code");
    bits.push_back(w.bits());
  }
  return bits;
}()) {}

std::vector<Word> Code::words() const {
  std::vector<Word> out;
  out.reserve(members_.size());
  for (std::uint16_t w : members_) out.emplace_back(length_, w);
  return out;
}

std::size_t Code::index_of(std::uint16_t bits) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), bits);
  if (it == members_.end() || *it != bits) throw std::out_of_range("word " + hex_of(bits, length_) + " not in code");
  return static_cast<std::size_t>(it - members_.begin());
}

Code translate(const Code& c, Word x) {
  if (x.length() != c.length()) throw std::invalid_argument("translate: length mismatch");
  std::vector<std::uint16_t> out(c.bits().begin(), c.bits().end());
  for (auto& w : out) w ^= x.bits();
  return Code(c.length(), std::move(out));
}

Code puncture(const Code& c, int coordinate) {
  if (coordinate < 0 || coordinate >= c.length()) {
    throw std::out_of_range("puncture coordinate " + std::to_string(coordinate) + " out of range");
  }
  if (c.length() == 1) throw std::invalid_argument("cannot puncture a length-1 code");
  std::vector<std::uint16_t> out;
  out.reserve(c.size());
  for (std::uint16_t w : c.bits()) out.push_back(puncture_bits(w, coordinate));
  return Code(c.length() - 1, std::move(out));
}

Code extend_parity(const Code& c) {
  if (c.length() >= kMaxLength) throw std::invalid_argument("extend_parity: length overflow");
  std::vector<std::uint16_t> out;
  out.reserve(c.size());
  for (std::uint16_t w : c.bits()) {
    const auto parity = static_cast<std::uint16_t>(std::popcount(w) & 1);
    out.push_back(static_cast<std::uint16_t>(w | (parity << c.length())));
  }
  return Code(c.length() + 1, std::move(out));
}

int min_distance(const Code& c) {
  int best = c.length() + 1;
  const auto bits = c.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (std::size_t j = i + 1; j < bits.size(); ++j) {
      best = std::min(best, std::popcount(static_cast<unsigned>(bits[i] ^ bits[j])));
    }
  }
  return best;
}

}  // namespace pcl
