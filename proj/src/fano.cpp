#include "pcl/fano.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace pcl {

namespace {

std::uint16_t pair_mask(const Pair& p, int offset) {
  return static_cast<std::uint16_t>((1U << (p[0] + offset)) | (1U << (p[1] + offset)));
}

Pair make_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  return {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
}

bool is_cross(std::uint16_t m) { return std::popcount(static_cast<unsigned>(m & 0xFF)) == 2; }

Pair pair_of_mask(unsigned m) {
  const int a = std::countr_zero(m);
  const int b = std::countr_zero(m & (m - 1));
  return make_pair(a, b);
}

// Partitions containing a given pair.
std::vector<PairPartition> containing(const Pair& p) {
  std::vector<PairPartition> out;
  for (const auto& pp : all_pair_partitions()) {
    if (std::find(pp.pairs().begin(), pp.pairs().end(), p) != pp.pairs().end()) out.push_back(pp);
  }
  return out;
}

bool all_in(const std::vector<std::uint16_t>& sorted, const QuadrupleSet& part) {
  for (const auto& q : part) {
    if (!std::binary_search(sorted.begin(), sorted.end(), q.mask())) return false;
  }
  return true;
}

void erase_all(std::vector<std::uint16_t>& sorted, const QuadrupleSet& part) {
  for (const auto& q : part) sorted.erase(std::lower_bound(sorted.begin(), sorted.end(), q.mask()));
}

std::vector<std::uint16_t> sorted_masks(const QuadrupleSet& q) {
  auto m = q.masks();
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

PairPartition::PairPartition() : pairs_{{{0, 1}, {2, 3}, {4, 5}, {6, 7}}} {}

PairPartition::PairPartition(std::array<Pair, 4> pairs) {
  unsigned seen = 0;
  for (auto& p : pairs) {
    if (p[0] > 7 || p[1] > 7 || p[0] == p[1]) throw std::invalid_argument("pair-partition: bad pair");
    p = make_pair(p[0], p[1]);
    const unsigned m = (1U << p[0]) | (1U << p[1]);
    if (seen & m) throw std::invalid_argument("pair-partition: pairs overlap");
    seen |= m;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = pairs;
}

PairPartition PairPartition::from_notation(int k, int l, int m) {
  const std::string name = std::to_string(k) + "_" + std::to_string(l) + "^" + std::to_string(m);
  if (k < 1 || k > 7 || l < 0 || l > 7 || m < 0 || m > 7) throw std::invalid_argument("invalid pair-partition " + name);
  unsigned used = 1U | (1U << k);
  std::array<Pair, 4> pairs{};
  pairs[0] = make_pair(0, k);
  std::size_t at = 1;
  for (int partner : {l, m}) {
    const int x = std::countr_one(used);
    if (partner == x || ((used >> partner) & 1U)) throw std::invalid_argument("invalid pair-partition " + name);
    pairs[at++] = make_pair(x, partner);
    used |= (1U << x) | (1U << partner);
  }
  pairs[3] = pair_of_mask(~used & 0xFFU);
  return PairPartition(pairs);
}

PairPartition PairPartition::parse_notation(std::string_view text) {
  // Accept "k_l^m" and "k_l^{m}".
  std::string digits;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') digits += ch;
    else if (ch != '_' && ch != '^' && ch != '{' && ch != '}') throw std::invalid_argument("bad notation '" + std::string(text) + "'");
  }
  if (digits.size() != 3) throw std::invalid_argument("bad notation '" + std::string(text) + "'");
  return from_notation(digits[0] - '0', digits[1] - '0', digits[2] - '0');
}

std::array<std::uint16_t, 4> PairPartition::masks(int offset) const {
  std::array<std::uint16_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = pair_mask(pairs_[i], offset);
  return out;
}

std::string PairPartition::notation() const {
  return std::to_string(pairs_[0][1]) + "_" + std::to_string(pairs_[1][1]) + "^" + std::to_string(pairs_[2][1]);
}

std::string PairPartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + pairs_[i][0]);
    out += static_cast<char>('0' + pairs_[i][1]);
  }
  return out + ")";
}

const std::vector<PairPartition>& all_pair_partitions() {
  static const std::vector<PairPartition> all = [] {
    std::vector<PairPartition> out;
    std::function<void(unsigned, std::vector<Pair>&)> rec = [&](unsigned used, std::vector<Pair>& acc) {
      if (used == 0xFF) {
        out.emplace_back(std::array<Pair, 4>{acc[0], acc[1], acc[2], acc[3]});
        return;
      }
      const int x = std::countr_one(used);
      for (int y = x + 1; y < 8; ++y) {
        if ((used >> y) & 1U) continue;
        acc.push_back(make_pair(x, y));
        rec(used | (1U << x) | (1U << y), acc);
        acc.pop_back();
      }
    };
    std::vector<Pair> acc;
    rec(0, acc);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

QuadrupleSet supplement(const QuadrupleSet& y, int s) {
  std::vector<Quadruple> out;
  for (const auto& q : y) {
    if (q[3] > s) throw std::invalid_argument("supplement: index exceeds " + std::to_string(s));
    out.emplace_back(s - q[0], s - q[1], s - q[2], s - q[3]);
  }
  return QuadrupleSet(std::move(out));
}

QuadrupleSet complement8(const QuadrupleSet& y) {
  std::vector<Quadruple> out;
  for (const auto& q : y) {
    if (q[3] > 7) throw std::invalid_argument("complement8: quadruple outside [0,7]");
    out.push_back(Quadruple::from_mask(static_cast<std::uint16_t>(~q.mask() & 0xFF)));
  }
  return QuadrupleSet(std::move(out));
}

const std::map<std::string, QuadrupleSet>& fano_families() {
  static const std::map<std::string, QuadrupleSet> families = [] {
    std::map<std::string, QuadrupleSet> f;
    // Lines of the Fano plane on [1,7], each completed by 0.
    const QuadrupleSet x = QuadrupleSet::parse("0123 0145 0167 0247 0256 0346 0357");
    const QuadrupleSet y = complement8(x);
    const QuadrupleSet z = supplement(x | y, 15);
    const QuadrupleSet a = QuadrupleSet::parse("0123 0145 0167");
    const QuadrupleSet b = x - a;
    const QuadrupleSet a0 = QuadrupleSet::parse("0123");
    const QuadrupleSet a1 = QuadrupleSet::parse("0145 0167");
    const QuadrupleSet b0 = QuadrupleSet::parse("0247 0256");
    const QuadrupleSet b1 = QuadrupleSet::parse("0346 0357");
    f["X"] = x;
    f["Y"] = y;
    f["Z"] = z;
    f["X'"] = y | z;
    f["A"] = a;
    f["B"] = b;
    f["A'"] = complement8(a);
    f["B'"] = complement8(b);
    f["A_0"] = a0;
    f["A_1"] = a1;
    f["B_0"] = b0;
    f["B_1"] = b1;
    f["A_0'"] = complement8(a0);
    f["A_1'"] = complement8(a1);
    f["B_0'"] = complement8(b0);
    f["B_1'"] = complement8(b1);
    f["Z'"] = z | complement8(a);
    f["Z_0"] = z | complement8(a0);
    return f;
  }();
  return families;
}

const QuadrupleSet& family(const std::string& name) {
  const auto& f = fano_families();
  auto it = f.find(name);
  if (it == f.end()) throw std::invalid_argument("unknown family '" + name + "'");
  return it->second;
}

std::vector<QuadrupleSet> s_partition(const QuadrupleSet& y, const std::vector<int>& sizes, SplitDirection dir) {
  int total = 0;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("s_partition: negative block size");
    total += s;
  }
  if (static_cast<std::size_t>(total) != y.size()) throw std::invalid_argument("s_partition: sizes do not sum to |Y|");
  std::vector<Quadruple> items = y.items();
  if (dir == SplitDirection::descending) std::reverse(items.begin(), items.end());
  std::vector<QuadrupleSet> out;
  std::size_t at = 0;
  for (int s : sizes) {
    out.emplace_back(std::vector<Quadruple>(items.begin() + static_cast<std::ptrdiff_t>(at),
                                            items.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(s))));
    at += static_cast<std::size_t>(s);
  }
  return out;
}

std::vector<int> kappa_partition_sizes(int kappa) {
  switch (kappa) {
    case 5: return {1, 1, 1, 1, 1, 1, 1};
    case 6: return {1, 2, 2, 2};
    case 7: return {3, 4};
    case 8:
    case 9: return {7};
    default: throw std::invalid_argument("kappa_partition_sizes: kappa must be in [5,9]");
  }
}

QuadrupleSet product(const PairPartition& a, const PairPartition& b) {
  std::vector<std::uint16_t> masks;
  for (std::uint16_t l : a.masks(0)) {
    for (std::uint16_t r : b.masks(8)) masks.push_back(static_cast<std::uint16_t>(l | r));
  }
  return QuadrupleSet::from_masks(masks);
}

QuadrupleSet quarter_set(const Quarter& q) {
  std::vector<std::uint16_t> masks;
  const std::uint16_t l = pair_mask(q.left, 0);
  for (std::uint16_t r : q.right.masks(8)) masks.push_back(static_cast<std::uint16_t>(l | r));
  return QuadrupleSet::from_masks(masks);
}

std::array<QuadrupleSet, 4> loq_split(const QuadrupleSet& p) {
  const auto rec = recognize_product(p);
  if (!rec || rec->kind != Recognition::Kind::product) throw std::invalid_argument("loq_split: not a product");
  std::array<QuadrupleSet, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = quarter_set({rec->left->pairs()[i], rec->right});
  return out;
}

std::optional<std::vector<Quarter>> decompose_quarters(const QuadrupleSet& q) {
  std::vector<std::uint16_t> rest = sorted_masks(q);
  for (std::uint16_t m : rest) {
    if (!is_cross(m)) return std::nullopt;
  }
  std::vector<Quarter> acc;
  std::function<bool()> rec = [&]() -> bool {
    if (rest.empty()) return true;
    // Least quadruple in lexicographic order fixes the left pair and one right pair.
    const Quadruple first = Quadruple::from_mask(*std::min_element(rest.begin(), rest.end(), [](auto a, auto b) {
      return Quadruple::from_mask(a) < Quadruple::from_mask(b);
    }));
    const Pair left = make_pair(first[0], first[1]);
    const Pair right = make_pair(first[2] - 8, first[3] - 8);
    for (const auto& b : containing(right)) {
      const Quarter cand{left, b};
      const QuadrupleSet s = quarter_set(cand);
      if (!all_in(rest, s)) continue;
      erase_all(rest, s);
      acc.push_back(cand);
      if (rec()) return true;
      acc.pop_back();
      for (const auto& x : s) rest.insert(std::lower_bound(rest.begin(), rest.end(), x.mask()), x.mask());
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::optional<std::vector<std::pair<PairPartition, PairPartition>>> decompose_products(const QuadrupleSet& q) {
  std::vector<std::uint16_t> rest = sorted_masks(q);
  for (std::uint16_t m : rest) {
    if (!is_cross(m)) return std::nullopt;
  }
  std::vector<std::pair<PairPartition, PairPartition>> acc;
  std::function<bool()> rec = [&]() -> bool {
    if (rest.empty()) return true;
    const Quadruple first = Quadruple::from_mask(*std::min_element(rest.begin(), rest.end(), [](auto a, auto b) {
      return Quadruple::from_mask(a) < Quadruple::from_mask(b);
    }));
    const Pair left = make_pair(first[0], first[1]);
    const Pair right = make_pair(first[2] - 8, first[3] - 8);
    for (const auto& a : containing(left)) {
      for (const auto& b : containing(right)) {
        const QuadrupleSet s = product(a, b);
        if (!all_in(rest, s)) continue;
        erase_all(rest, s);
        acc.emplace_back(a, b);
        if (rec()) return true;
        acc.pop_back();
        for (const auto& x : s) rest.insert(std::lower_bound(rest.begin(), rest.end(), x.mask()), x.mask());
      }
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::optional<Recognition> recognize_product(const QuadrupleSet& q) {
  if (q.size() == 16) {
    auto d = decompose_products(q);
    if (!d || d->size() != 1) return std::nullopt;
    Recognition r;
    r.kind = Recognition::Kind::product;
    r.left = d->front().first;
    r.right = d->front().second;
    return r;
  }
  if (q.size() == 4) {
    auto d = decompose_quarters(q);
    if (!d || d->size() != 1) return std::nullopt;
    Recognition r;
    r.kind = Recognition::Kind::quarter;
    r.left_pair = d->front().left;
    r.right = d->front().right;
    return r;
  }
  return std::nullopt;
}

const std::map<std::string, PairPartition>& partition_registry() {
  static const std::map<std::string, PairPartition> reg = [] {
    // name, k, l, m for k_l^m. 7_k is listed as 7_2^3, which names no
    // pair-partition (3 would pair with itself), so it is left out.
    static constexpr struct {
      const char* name;
      int k, l, m;
    } kEntries[] = {
        {"1_a", 1, 3, 5}, {"2_a", 2, 3, 7}, {"3_a", 3, 2, 7}, {"4_a", 4, 5, 7}, {"5_a", 5, 4, 6}, {"6_a", 6, 7, 4},
        {"7_a", 7, 6, 5}, {"1_b", 1, 3, 6}, {"2_b", 2, 3, 6}, {"3_b", 3, 2, 6}, {"4_b", 4, 5, 6}, {"5_b", 5, 4, 7},
        {"6_b", 6, 7, 5}, {"7_b", 7, 6, 4}, {"1_c", 1, 3, 7}, {"2_c", 2, 3, 5}, {"3_c", 3, 2, 5}, {"4_c", 4, 6, 5},
        {"4_d", 4, 6, 7}, {"4_e", 4, 7, 6}, {"5_c", 5, 7, 4}, {"5_d", 5, 7, 6}, {"5_e", 5, 6, 7}, {"6_c", 6, 4, 7},
        {"6_d", 6, 4, 5}, {"6_e", 6, 5, 4}, {"7_c", 7, 5, 6}, {"7_d", 7, 5, 4}, {"7_e", 7, 4, 5}, {"1_d", 1, 5, 4},
        {"1_e", 1, 6, 7}, {"1_f", 1, 4, 5}, {"2_d", 2, 5, 7}, {"2_e", 2, 4, 6}, {"2_f", 2, 6, 4}, {"3_d", 3, 4, 7},
        {"3_e", 3, 7, 4}, {"3_f", 3, 5, 6}, {"4_f", 4, 3, 6}, {"4_g", 4, 2, 7}, {"4_h", 4, 5, 3}, {"5_f", 5, 2, 6},
        {"5_g", 5, 3, 7}, {"6_f", 6, 2, 5}, {"6_g", 6, 7, 3}, {"7_f", 7, 6, 3}, {"7_g", 7, 3, 5}, {"1_g", 1, 4, 7},
        {"1_h", 1, 4, 6}, {"1_i", 1, 7, 6}, {"1_j", 1, 5, 7}, {"1_k", 1, 6, 5}, {"2_g", 2, 7, 6}, {"2_h", 2, 5, 6},
        {"2_i", 2, 4, 7}, {"2_j", 2, 7, 5}, {"2_k", 2, 4, 5}, {"3_g", 3, 7, 6}, {"3_h", 3, 7, 5}, {"3_i", 3, 4, 6},
        {"3_j", 3, 6, 7}, {"4_i", 4, 2, 6}, {"4_j", 4, 3, 5}, {"5_h", 5, 6, 4}, {"5_i", 5, 4, 3}, {"5_j", 5, 2, 4},
        {"5_k", 5, 6, 3}, {"6_h", 6, 3, 5}, {"6_i", 6, 3, 4}, {"6_j", 6, 5, 7}, {"6_k", 6, 5, 3}, {"7_h", 7, 5, 3},
        {"7_i", 7, 2, 5}, {"7_j", 7, 3, 4},
    };
    std::map<std::string, PairPartition> m;
    for (const auto& e : kEntries) m.emplace(e.name, PairPartition::from_notation(e.k, e.l, e.m));
    return m;
  }();
  return reg;
}

const PairPartition& registry_lookup(const std::string& name) {
  const auto& reg = partition_registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    if (name == "7_k") throw std::invalid_argument("registry entry 7_k = 7_2^3 does not decode to a pair-partition");
    throw std::invalid_argument("unknown pair-partition name '" + name + "'");
  }
  return it->second;
}

std::optional<std::string> registry_name(const PairPartition& p) {
  for (const auto& [name, pp] : partition_registry()) {
    if (pp == p) return name;
  }
  return std::nullopt;
}

}  // namespace pcl
