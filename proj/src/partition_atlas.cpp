#include "pcl/partition_atlas.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "pcl/exact_cover.hpp"
#include "pcl/perfect_codes.hpp"

namespace pcl {

namespace {

using Lut = std::array<std::uint8_t, 256>;
using Members = std::array<std::uint8_t, 16>;

int length_of(PartitionKind kind) { return kind == PartitionKind::perfect7 ? 7 : 8; }

Lut lut_of(std::span<const int> perm, int n) {
  Lut lut{};
  for (unsigned w = 0; w < (1U << n); ++w) {
    unsigned img = 0;
    for (int i = 0; i < n; ++i) {
      if ((w >> i) & 1U) img |= 1U << perm[static_cast<std::size_t>(i)];
    }
    lut[w] = static_cast<std::uint8_t>(img);
  }
  return lut;
}

// Group data for one length. The pivot is the lexicographically least linear
// code; every component of a partition is a coset of some linear code, so a
// minimal image always starts with the pivot.
struct Geometry {
  int n = 0;
  std::vector<std::uint8_t> ambient;
  Members pivot{};
  std::map<Members, Lut> to_pivot;
  std::vector<Lut> aut;
};

Geometry build_geometry(int n) {
  Geometry g;
  g.n = n;
  for (unsigned w = 0; w < (1U << n); ++w) {
    if (n == 7 || std::popcount(w) % 2 == 0) g.ambient.push_back(static_cast<std::uint8_t>(w));
  }
  Code base = hamming7().code;
  if (n == 8) base = extend_parity(base);

  std::map<Members, Lut> from_base;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Lut lut = lut_of(perm, n);
    Members m{};
    for (std::size_t i = 0; i < 16; ++i) m[i] = lut[base.bits()[i]];
    std::sort(m.begin(), m.end());
    from_base.emplace(m, lut);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (from_base.size() != 30) throw std::logic_error("expected 30 linear codes");

  g.pivot = from_base.begin()->first;
  const Lut& to_p = from_base.begin()->second;
  for (const auto& [m, lut] : from_base) {
    Lut inv{};
    for (unsigned w = 0; w < (1U << n); ++w) inv[lut[w]] = static_cast<std::uint8_t>(w);
    Lut rho{};
    for (unsigned w = 0; w < (1U << n); ++w) rho[w] = to_p[inv[w]];
    g.to_pivot.emplace(m, rho);
  }

  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Lut lut = lut_of(perm, n);
    Members m{};
    for (std::size_t i = 0; i < 16; ++i) m[i] = lut[g.pivot[i]];
    std::sort(m.begin(), m.end());
    if (m == g.pivot) g.aut.push_back(lut);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

const Geometry& geometry(PartitionKind kind) {
  static const Geometry g7 = build_geometry(7);
  static const Geometry g8 = build_geometry(8);
  return kind == PartitionKind::perfect7 ? g7 : g8;
}

std::string canonical_impl(const std::array<Code, 8>& parts, PartitionKind kind) {
  const Geometry& g = geometry(kind);
  std::array<std::uint8_t, 256> label{};
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::uint16_t w : parts[k].bits()) label[w] = static_cast<std::uint8_t>(k);
  }
  std::string best;
  std::string cand(128, '\0');
  std::array<std::uint8_t, 128> moved{};
  std::array<std::uint8_t, 256> img{};
  for (std::uint8_t t : g.ambient) {
    const Code& home = parts[label[t]];
    Members m{};
    for (std::size_t i = 0; i < 16; ++i) m[i] = static_cast<std::uint8_t>(home.bits()[i] ^ t);
    std::sort(m.begin(), m.end());
    const Lut& rho = g.to_pivot.at(m);
    for (std::size_t i = 0; i < 128; ++i) moved[i] = rho[g.ambient[i] ^ t];
    for (const Lut& a : g.aut) {
      for (std::size_t i = 0; i < 128; ++i) img[a[moved[i]]] = label[g.ambient[i]];
      std::array<int, 8> order;
      order.fill(-1);
      std::array<int, 8> cnt{};
      int next = 0;
      for (std::uint8_t u : g.ambient) {
        const std::uint8_t c = img[u];
        if (order[c] < 0) order[c] = next++;
        cand[static_cast<std::size_t>(order[c] * 16 + cnt[c]++)] = static_cast<char>(u);
      }
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

// Sorted components, sorted among themselves, as 128 bytes.
std::string key_of(const std::array<Code, 8>& parts) {
  std::array<Members, 8> chunks{};
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 16; ++i) chunks[k][i] = static_cast<std::uint8_t>(parts[k].bits()[i]);
  }
  std::sort(chunks.begin(), chunks.end());
  std::string out(128, '\0');
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 16; ++i) out[k * 16 + i] = static_cast<char>(chunks[k][i]);
  }
  return out;
}

std::string map_key(const std::string& key, const Lut& lut, std::uint8_t t) {
  std::array<Members, 8> chunks{};
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 16; ++i) {
      chunks[k][i] = static_cast<std::uint8_t>(lut[static_cast<std::uint8_t>(key[k * 16 + i])] ^ t);
    }
    std::sort(chunks[k].begin(), chunks[k].end());
  }
  std::sort(chunks.begin(), chunks.end());
  std::string out(128, '\0');
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 16; ++i) out[k * 16 + i] = static_cast<char>(chunks[k][i]);
  }
  return out;
}

bool is_valid_component(const Code& c, PartitionKind kind) {
  if (c.length() != length_of(kind) || c.size() != 16) return false;
  const int dmin = kind == PartitionKind::perfect7 ? 3 : 4;
  if (kind == PartitionKind::extended8) {
    for (std::uint16_t w : c.bits()) {
      if (std::popcount(w) & 1) return false;
    }
  }
  // 16 words at mutual distance >= 3 in F_2^7 is the sphere-packing bound, so
  // this is equivalent to perfection; likewise for the extended case.
  return min_distance(c) >= dmin;
}

template <class P>
std::vector<P> enumerate_impl(const std::vector<PerfectCode>& codes) {
  std::vector<Bits256> rows;
  rows.reserve(codes.size());
  for (const auto& pc : codes) {
    Bits256 b;
    for (std::uint16_t w : pc.code.bits()) b.set(w & 0x7F);
    rows.push_back(b);
  }
  ExactCover ec(128, std::move(rows));
  std::vector<P> out;
  ec.solve([&](const std::vector<int>& chosen) {
    std::vector<int> idx = chosen;
    std::sort(idx.begin(), idx.end());
    std::array<Code, 8> parts;
    for (std::size_t k = 0; k < 8; ++k) parts[k] = codes[static_cast<std::size_t>(idx[k])].code;
    out.emplace_back(std::move(parts));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const P& a, const P& b) { return a.parts() < b.parts(); });
  return out;
}

template <class P>
P sorted_impl(const P& p) {
  std::array<Code, 8> parts = p.parts();
  std::sort(parts.begin(), parts.end());
  return P(std::move(parts));
}

template <class P>
P transform_impl(const P& p, std::span<const int> perm, std::uint16_t t) {
  constexpr int n = P::kLength;
  if (perm.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("transform: permutation length");
  std::vector<int> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] != i) throw std::invalid_argument("transform: not a permutation");
  }
  const Lut lut = lut_of(perm, n);
  std::array<Code, 8> parts;
  for (std::size_t k = 0; k < 8; ++k) {
    std::vector<std::uint16_t> words;
    for (std::uint16_t w : p[k].bits()) words.push_back(static_cast<std::uint16_t>(lut[w] ^ t));
    parts[k] = Code(n, std::move(words));
  }
  return P(std::move(parts));
}

Classification classify_impl(std::span<const std::array<Code, 8>> inputs, PartitionKind kind) {
  const int n = length_of(kind);
  std::vector<int> swap01(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n)),
      ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  swap01 = ident;
  std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  const std::array<std::pair<Lut, std::uint8_t>, 3> gens{{
      {lut_of(swap01, n), 0},
      {lut_of(cycle, n), 0},
      {lut_of(ident, n), static_cast<std::uint8_t>(kind == PartitionKind::perfect7 ? 0x01 : 0x03)},
  }};

  struct Tmp {
    std::string canonical;
    std::size_t orbit = 0;
    std::size_t members = 0;
  };
  std::vector<Tmp> tmp;
  std::unordered_map<std::string, int> stamp;
  Classification out;
  out.kind = kind;
  out.class_of.reserve(inputs.size());

  for (const auto& parts : inputs) {
    validate_partition(parts, kind);
    const std::string key = key_of(parts);
    auto it = stamp.find(key);
    int id;
    if (it != stamp.end()) {
      id = it->second;
    } else {
      id = static_cast<int>(tmp.size());
      std::deque<std::string> queue{key};
      stamp.emplace(key, id);
      std::size_t orbit = 1;
      while (!queue.empty()) {
        const std::string cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& [lut, t] : gens) {
          std::string next = map_key(cur, lut, t);
          if (stamp.emplace(next, id).second) {
            ++orbit;
            queue.push_back(std::move(next));
          }
        }
      }
      tmp.push_back({canonical_impl(parts, kind), orbit, 0});
    }
    ++tmp[static_cast<std::size_t>(id)].members;
    out.class_of.push_back(id);
  }

  std::vector<int> order(tmp.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return tmp[static_cast<std::size_t>(a)].canonical < tmp[static_cast<std::size_t>(b)].canonical;
  });
  std::vector<int> rank(tmp.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Tmp& t = tmp[static_cast<std::size_t>(order[r])];
    rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    PartitionClass pc;
    pc.id = static_cast<int>(r);
    pc.canonical = t.canonical;
    pc.representative = decode_canonical(t.canonical, kind);
    pc.orbit_size = t.orbit;
    pc.members = t.members;
    out.classes.push_back(std::move(pc));
  }
  for (int& c : out.class_of) c = rank[static_cast<std::size_t>(c)];
  return out;
}

template <class P>
Classification classify_wrap(std::span<const P> parts, PartitionKind kind) {
  if (parts.empty()) throw std::invalid_argument("classify_partitions: empty input");
  std::vector<std::array<Code, 8>> raw;
  raw.reserve(parts.size());
  for (const auto& p : parts) raw.push_back(p.parts());
  return classify_impl(raw, kind);
}

}  // namespace

void validate_partition(const std::array<Code, 8>& parts, PartitionKind kind) {
  const int n = length_of(kind);
  std::array<bool, 256> seen{};
  std::size_t total = 0;
  for (const Code& c : parts) {
    if (!is_valid_component(c, kind)) {
      throw std::invalid_argument(kind == PartitionKind::perfect7 ? "partition component is not a 1-perfect code"
                                                                  : "partition component is not an extended 1-perfect code");
    }
    for (std::uint16_t w : c.bits()) {
      if (seen[w]) throw std::invalid_argument("partition components overlap at " + hex_of(w, n));
      seen[w] = true;
      ++total;
    }
  }
  if (total != 128) throw std::invalid_argument("partition does not cover the ambient space");
}

std::vector<PerfectPartition> enumerate_partitions7() {
  return enumerate_impl<PerfectPartition>(enumerate_perfect7());
}

std::vector<ExtendedPartition> enumerate_partitions8() {
  return enumerate_impl<ExtendedPartition>(enumerate_extended8());
}

PerfectPartition hamming_coset_partition() {
  const Code h = hamming7().code;
  std::array<Code, 8> parts;
  // Coset leaders: 0 and the seven unit vectors.
  parts[0] = h;
  for (int i = 0; i < 7; ++i) parts[static_cast<std::size_t>(i + 1)] = translate(h, Word(7, 1U << i));
  std::sort(parts.begin(), parts.end());
  return PerfectPartition(std::move(parts));
}

ExtendedPartition extended_hamming_coset_partition() { return extend_partition(hamming_coset_partition()); }

ExtendedPartition extend_partition(const PerfectPartition& p) {
  std::array<Code, 8> parts;
  for (std::size_t k = 0; k < 8; ++k) parts[k] = extend_parity(p[k]);
  return ExtendedPartition(std::move(parts));
}

PerfectPartition puncture_partition(const ExtendedPartition& p) {
  std::array<Code, 8> parts;
  for (std::size_t k = 0; k < 8; ++k) parts[k] = puncture(p[k], 7);
  return PerfectPartition(std::move(parts));
}

PerfectPartition sorted_components(const PerfectPartition& p) { return sorted_impl(p); }
ExtendedPartition sorted_components(const ExtendedPartition& p) { return sorted_impl(p); }

PerfectPartition transform(const PerfectPartition& p, std::span<const int> perm, std::uint16_t t) {
  return transform_impl(p, perm, t);
}

ExtendedPartition transform(const ExtendedPartition& p, std::span<const int> perm, std::uint16_t t) {
  if (std::popcount(t) & 1) throw std::invalid_argument("transform: extended partitions need an even translation");
  return transform_impl(p, perm, t);
}

std::string canonical_form(const PerfectPartition& p) { return canonical_impl(p.parts(), PartitionKind::perfect7); }
std::string canonical_form(const ExtendedPartition& p) { return canonical_impl(p.parts(), PartitionKind::extended8); }

std::array<Code, 8> decode_canonical(const std::string& form, PartitionKind kind) {
  if (form.size() != 128) throw std::invalid_argument("canonical form must be 128 bytes");
  std::array<Code, 8> parts;
  for (std::size_t k = 0; k < 8; ++k) {
    std::vector<std::uint16_t> words;
    for (std::size_t i = 0; i < 16; ++i) words.push_back(static_cast<std::uint8_t>(form[k * 16 + i]));
    parts[k] = Code(length_of(kind), std::move(words));
  }
  validate_partition(parts, kind);
  return parts;
}

Classification classify_partitions(std::span<const PerfectPartition> parts) {
  return classify_wrap(parts, PartitionKind::perfect7);
}

Classification classify_partitions(std::span<const ExtendedPartition> parts) {
  return classify_wrap(parts, PartitionKind::extended8);
}

void apply_aliases(Classification& c, const std::map<int, std::string>& aliases) {
  for (const auto& [id, label] : aliases) {
    if (id < 0 || static_cast<std::size_t>(id) >= c.classes.size()) {
      throw std::invalid_argument("alias for unknown class " + std::to_string(id));
    }
    c.classes[static_cast<std::size_t>(id)].alias = label;
  }
}

Classification atlas7() {
  const auto parts = enumerate_partitions7();
  return classify_partitions(std::span<const PerfectPartition>(parts));
}

Classification atlas8() {
  const auto parts = enumerate_partitions8();
  return classify_partitions(std::span<const ExtendedPartition>(parts));
}

}  // namespace pcl
