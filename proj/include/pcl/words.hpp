#pragma once

// Fixed-width binary words, Hamming metric and immutable code containers.
//
// Coordinate i of a word is bit i of its pattern. Coordinates are rendered as
// the hex digits 0..f, codewords as ceil(n/4)-digit hex strings of the pattern.

#include <array>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcl {

inline constexpr int kMaxLength = 16;

class Word {
 public:
  constexpr Word() = default;
  Word(int length, std::uint32_t bits);

  static Word from_coordinates(int length, std::initializer_list<int> coords);
  static Word from_hex(int length, std::string_view hex);

  int length() const noexcept { return length_; }
  std::uint16_t bits() const noexcept { return bits_; }
  bool test(int coordinate) const noexcept { return (bits_ >> coordinate) & 1U; }

  Word operator^(Word other) const;

  // ceil(length/4) lowercase hex digits, most significant first.
  std::string hex() const;

  friend bool operator==(Word, Word) = default;
  friend auto operator<=>(Word, Word) = default;

 private:
  std::uint8_t length_ = 0;
  std::uint16_t bits_ = 0;
};

int weight(Word w) noexcept;
int distance(Word v, Word w);

std::string hex_of(std::uint16_t bits, int length);
std::uint16_t parse_hex(std::string_view hex, int length);

// Four distinct coordinate indices in ascending order.
class Quadruple {
 public:
  Quadruple(int a, int b, int c, int d);
  static Quadruple from_mask(std::uint16_t mask);
  // Four hex digits, any order ("0123", "cdef").
  static Quadruple parse(std::string_view text);

  const std::array<std::uint8_t, 4>& indices() const noexcept { return idx_; }
  std::uint8_t operator[](std::size_t i) const noexcept { return idx_[i]; }
  std::uint16_t mask() const noexcept;
  std::string hex() const;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
  // Componentwise lexicographic order on the ascending index tuple.
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;

 private:
  Quadruple() = default;
  std::array<std::uint8_t, 4> idx_{};
};

// The four coordinates where v and w differ; requires distance(v, w) == 4.
Quadruple diff_quadruple(Word v, Word w);

// Immutable set of equal-length words with O(1) membership.
class Code {
 public:
  Code() = default;
  // Sorts and removes duplicates; throws if any pattern does not fit in length.
  Code(int length, std::vector<std::uint16_t> members);
  Code(int length, std::span<const Word> members);

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const std::uint16_t> bits() const noexcept { return members_; }
  Word operator[](std::size_t i) const { return Word(length_, members_[i]); }
  std::vector<Word> words() const;

  bool contains(std::uint16_t bits) const noexcept {
    return bits < (1U << length_) && ((occupancy_[bits >> 6] >> (bits & 63)) & 1U);
  }
  bool contains(Word w) const noexcept { return w.length() == length_ && contains(w.bits()); }

  // Position of a member in the sorted listing; throws if absent.
  std::size_t index_of(std::uint16_t bits) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.length_ == b.length_ && a.members_ == b.members_;
  }
  // Lexicographic on the sorted member list (same as on sorted hex strings).
  friend auto operator<=>(const Code& a, const Code& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  int length_ = 0;
  std::vector<std::uint16_t> members_;
  std::vector<std::uint64_t> occupancy_{0};
};

Code translate(const Code& c, Word x);
Code puncture(const Code& c, int coordinate);
Code extend_parity(const Code& c);
int min_distance(const Code& c);

// Deletes a coordinate from a raw pattern.
constexpr std::uint16_t puncture_bits(std::uint16_t w, int coordinate) noexcept {
  const std::uint16_t low = w & ((1U << coordinate) - 1U);
  return static_cast<std::uint16_t>(low | ((w >> (coordinate + 1)) << coordinate));
}

}  // namespace pcl
