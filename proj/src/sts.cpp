#include "pcl/sts.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "pcl/doubling.hpp"

namespace pcl {

namespace {

Triple make_triple(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]), static_cast<std::uint8_t>(v[2])};
}

PaschProfile finish(int total, std::array<int, 15> per) {
  std::sort(per.begin(), per.end(), std::greater<>());
  return {total, per};
}

PaschProfile row(int total, std::initializer_list<std::pair<int, int>> runs) {
  std::array<int, 15> per{};
  std::size_t at = 0;
  for (auto [value, times] : runs) {
    for (int i = 0; i < times; ++i) per[at++] = value;
  }
  return {total, per};
}

}  // namespace

StsSystem::StsSystem(std::vector<Triple> triples) : triples_(std::move(triples)) {
  if (triples_.size() != 35) throw std::invalid_argument("STS(15) needs 35 triples, got " + std::to_string(triples_.size()));
  third_.fill(-1);
  for (auto& t : triples_) {
    t = make_triple(t[0], t[1], t[2]);
    if (t[2] > 14 || t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("STS triple out of range or degenerate");
    const std::array<std::pair<int, int>, 3> pairs{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    const std::array<int, 3> others{t[2], t[1], t[0]};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [a, b] = pairs[k];
      if (third_[static_cast<std::size_t>(a * 15 + b)] >= 0) throw std::invalid_argument("pair covered twice in STS");
      third_[static_cast<std::size_t>(a * 15 + b)] = static_cast<std::int8_t>(others[k]);
      third_[static_cast<std::size_t>(b * 15 + a)] = static_cast<std::int8_t>(others[k]);
    }
  }
  std::sort(triples_.begin(), triples_.end());
}

StsSystem StsSystem::relabel(const std::array<int, 15>& perm) const {
  std::vector<Triple> out;
  for (const auto& t : triples_) out.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
  return StsSystem(std::move(out));
}

std::string PaschProfile::str() const {
  std::string out = std::to_string(total) + "(";
  for (std::size_t i = 0; i < 15; ++i) {
    if (i) out += ',';
    out += std::to_string(per_point[i]);
  }
  return out + ")";
}

StsSystem sts_of(const Code& c15, Word v) {
  if (c15.length() != 15) throw std::invalid_argument("sts_of: code length must be 15");
  if (!c15.contains(v)) throw std::invalid_argument("sts_of: word " + v.hex() + " is not a codeword");
  std::vector<Triple> triples;
  for (std::uint16_t w : c15.bits()) {
    const unsigned d = w ^ v.bits();
    if (std::popcount(d) != 3) continue;
    const int a = std::countr_zero(d);
    const int b = std::countr_zero(d & (d - 1));
    const int c = std::bit_width(d) - 1;
    triples.push_back(make_triple(a, b, c));
  }
  return StsSystem(std::move(triples));
}

StsSystem derived_sts(const SqsSystem& s, int point) {
  if (point < 0 || point > 15) throw std::invalid_argument("derived_sts: point out of range");
  auto shift = [point](int x) { return x > point ? x - 1 : x; };
  std::vector<Triple> triples;
  for (const auto& q : s.blocks()) {
    std::array<int, 3> rest{};
    std::size_t k = 0;
    bool has = false;
    for (std::size_t i = 0; i < 4; ++i) {
      if (q[i] == point) has = true;
      else if (k < 3) rest[k++] = shift(q[i]);
    }
    if (has) triples.push_back(make_triple(rest[0], rest[1], rest[2]));
  }
  return StsSystem(std::move(triples));
}

PaschProfile pasch_profile(const StsSystem& s) {
  std::array<int, 15> per{};
  int found = 0;
  const auto& ts = s.triples();
  // Every pair of lines of a Pasch configuration meets in one point, so each
  // configuration is reached once from each of its 6 line pairs.
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const auto& t1 = ts[i];
      const auto& t2 = ts[j];
      int a = -1;
      for (int x : t1) {
        if (std::find(t2.begin(), t2.end(), x) != t2.end()) a = x;
      }
      if (a < 0) continue;
      std::array<int, 2> bc{}, de{};
      std::size_t p = 0, q = 0;
      for (int x : t1) {
        if (x != a) bc[p++] = x;
      }
      for (int x : t2) {
        if (x != a) de[q++] = x;
      }
      for (int swap = 0; swap < 2; ++swap) {
        const int b = bc[0], c = bc[1];
        const int d = de[static_cast<std::size_t>(swap)], e = de[static_cast<std::size_t>(1 - swap)];
        const int f = s.third(b, d);
        if (s.third(c, e) != f) continue;
        ++found;
        for (int x : {a, b, c, d, e, f}) ++per[static_cast<std::size_t>(x)];
      }
    }
  }
  if (found % 6) throw std::logic_error("pasch_profile: count not divisible by 6");
  for (int& x : per) x /= 6;
  return finish(found / 6, per);
}

PaschProfile pasch_profile_exhaustive(const StsSystem& s) {
  std::vector<std::uint16_t> m;
  for (const auto& t : s.triples()) m.push_back(static_cast<std::uint16_t>((1U << t[0]) | (1U << t[1]) | (1U << t[2])));
  std::array<int, 15> per{};
  int total = 0;
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const unsigned ab = m[a] | m[b];
      if (std::popcount(ab) > 5) continue;  // two lines of a configuration meet
      for (std::size_t c = b + 1; c < n; ++c) {
        const unsigned abc = ab | m[c];
        if (std::popcount(abc) > 6) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          const unsigned all = abc | m[d];
          // Six points carrying four lines of an STS force every degree to 2.
          if (std::popcount(all) != 6) continue;
          ++total;
          for (int x = 0; x < 15; ++x) {
            if ((all >> x) & 1U) ++per[static_cast<std::size_t>(x)];
          }
        }
      }
    }
  }
  return finish(total, per);
}

const std::vector<StsTypeRow>& sts_type_table() {
  static const std::vector<StsTypeRow> table = {
      {1, row(105, {{42, 15}})},
      {2, row(73, {{42, 1}, {30, 8}, {26, 6}})},
      {3, row(57, {{26, 3}, {24, 8}, {18, 4}})},
      {4, row(49, {{30, 1}, {26, 1}, {22, 1}, {20, 4}, {18, 6}, {14, 2}})},
      {5, row(49, {{26, 2}, {20, 4}, {18, 9}})},
      {6, row(37, {{22, 3}, {14, 6}, {12, 6}})},
      {7, row(33, {{18, 3}, {12, 12}})},
      {8, row(37, {{18, 3}, {15, 4}, {14, 7}, {10, 1}})},
      {13, row(33, {{20, 1}, {16, 2}, {14, 2}, {12, 9}, {10, 1}})},
      {14, row(37, {{24, 1}, {16, 3}, {15, 4}, {14, 3}, {12, 4}})},
      {16, row(49, {{21, 8}, {18, 7}})},
  };
  return table;
}

std::optional<int> classify_type(const PaschProfile& p) {
  PaschProfile sorted = finish(p.total, p.per_point);
  for (const auto& r : sts_type_table()) {
    if (r.profile == sorted) return r.id;
  }
  return std::nullopt;
}

int sts_type(const StsSystem& s) {
  const PaschProfile p = pasch_profile(s);
  if (auto t = classify_type(p)) return *t;
  throw UnknownStsType("STS profile " + p.str() + " is not in the type table");
}

char type_letter(int id) {
  if (id >= 1 && id <= 9) return static_cast<char>('0' + id);
  switch (id) {
    case 13: return 'c';
    case 14: return 'd';
    case 16: return 'g';
    default: throw std::invalid_argument("no letter for STS type " + std::to_string(id));
  }
}

std::string render_tuple(const std::array<int, 16>& tuple) {
  std::string out;
  for (int t : tuple) out += type_letter(t);
  return out;
}

std::array<int, 16> class_type_tuple(const Code& c16, Word rep) {
  if (c16.length() != 16) throw std::invalid_argument("class_type_tuple: code length must be 16");
  if (!c16.contains(rep)) throw std::invalid_argument("class_type_tuple: representative is not a codeword");
  std::array<int, 16> out{};
  for (int i = 0; i < 16; ++i) {
    const Code p = puncture(c16, i);
    out[static_cast<std::size_t>(i)] = sts_type(sts_of(p, Word(15, puncture_bits(rep.bits(), i))));
  }
  return out;
}

std::vector<std::array<int, 16>> vertex_type_tuples(const Code& c16, const CosetDecomposition& cd) {
  std::vector<std::vector<std::uint16_t>> ref(cd.count());
  for (std::size_t k = 0; k < cd.count(); ++k) ref[k] = distance4_masks(c16, cd.representatives[k]);
  const auto bits = c16.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (distance4_masks(c16, bits[i]) != ref[static_cast<std::size_t>(cd.coset_of[i])]) {
      throw std::logic_error("STS type tuple differs inside the coset of " + hex_of(bits[i], 16));
    }
  }
  std::array<Code, 16> punctured;
  for (int i = 0; i < 16; ++i) punctured[static_cast<std::size_t>(i)] = puncture(c16, i);
  std::vector<std::array<int, 16>> out;
  for (std::uint16_t rep : cd.representatives) {
    std::array<int, 16> t{};
    for (int i = 0; i < 16; ++i) {
      t[static_cast<std::size_t>(i)] =
          sts_type(sts_of(punctured[static_cast<std::size_t>(i)], Word(15, puncture_bits(rep, i))));
    }
    out.push_back(t);
  }
  return out;
}

Homogeneity homogeneity(const std::vector<std::array<int, 16>>& tuples) {
  if (tuples.empty()) return {};
  auto sorted = [](std::array<int, 16> t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  const auto first = sorted(tuples.front());
  Homogeneity h;
  h.sqs_homogeneous = std::all_of(tuples.begin(), tuples.end(), [&](const auto& t) { return sorted(t) == first; });
  h.sts_homogeneous = h.sqs_homogeneous && first.front() == first.back();
  return h;
}

Homogeneity homogeneity(const Code& c16) {
  const Code z = normalize(c16).first;
  return homogeneity(vertex_type_tuples(z, cosets(z, kernel(z))));
}

StsSystem random_sts(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<std::array<int, 15>, 15> third{};
  for (auto& r : third) r.fill(-1);
  int blocks = 0;
  auto pick = [&](const std::vector<int>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  auto set_block = [&](int a, int b, int c, bool on) {
    third[a][b] = third[b][a] = on ? c : -1;
    third[a][c] = third[c][a] = on ? b : -1;
    third[b][c] = third[c][b] = on ? a : -1;
  };
  while (blocks < 35) {
    std::vector<int> live;
    for (int x = 0; x < 15; ++x) {
      for (int y = 0; y < 15; ++y) {
        if (y != x && third[x][y] < 0) {
          live.push_back(x);
          break;
        }
      }
    }
    const int x = pick(live);
    std::vector<int> open;
    for (int y = 0; y < 15; ++y) {
      if (y != x && third[x][y] < 0) open.push_back(y);
    }
    const int y = pick(open);
    int z = y;
    while (z == y) z = pick(open);
    if (third[y][z] < 0) {
      set_block(x, y, z, true);
      ++blocks;
    } else {
      set_block(y, z, third[y][z], false);
      set_block(x, y, z, true);
    }
  }
  std::vector<Triple> triples;
  for (int a = 0; a < 15; ++a) {
    for (int b = a + 1; b < 15; ++b) {
      const int c = third[a][b];
      if (c > b) triples.push_back(make_triple(a, b, c));
    }
  }
  return StsSystem(std::move(triples));
}

}  // namespace pcl
