#include "pcl/sqs_fold.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pcl {

namespace {

struct Neighbourhood {
  std::vector<std::uint16_t> masks;
  std::vector<int> dest;  // coset index of v ^ mask
};

Neighbourhood neighbourhood(const Code& c, const CosetDecomposition& cd, std::uint16_t v) {
  Neighbourhood nb;
  const auto bits = c.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const auto d = static_cast<std::uint16_t>(bits[i] ^ v);
    if (std::popcount(d) == 4) {
      nb.masks.push_back(d);
      nb.dest.push_back(cd.coset_of[i]);
    }
  }
  // bits are ascending but masks are not; sort jointly.
  std::vector<std::size_t> order(nb.masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nb.masks[a] < nb.masks[b]; });
  Neighbourhood out;
  for (std::size_t i : order) {
    out.masks.push_back(nb.masks[i]);
    out.dest.push_back(nb.dest[i]);
  }
  return out;
}

// Label -> destination coset, seen from each coset's least member, after
// checking every other member agrees. Returns false on disagreement.
bool coset_views(const Code& c, const CosetDecomposition& cd, std::vector<Neighbourhood>& views) {
  views.clear();
  for (std::uint16_t rep : cd.representatives) views.push_back(neighbourhood(c, cd, rep));
  const auto bits = c.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const Neighbourhood& ref = views[static_cast<std::size_t>(cd.coset_of[i])];
    if (bits[i] == cd.representatives[static_cast<std::size_t>(cd.coset_of[i])]) continue;
    const Neighbourhood nb = neighbourhood(c, cd, bits[i]);
    if (nb.masks != ref.masks || nb.dest != ref.dest) return false;
  }
  return true;
}

SqsGraph graph_from_views(const CosetDecomposition& cd, const std::vector<Neighbourhood>& views) {
  std::map<std::pair<int, int>, std::vector<std::uint16_t>> edges;
  for (std::size_t u = 0; u < views.size(); ++u) {
    const auto& nb = views[u];
    for (std::size_t k = 0; k < nb.masks.size(); ++k) {
      const int a = static_cast<int>(u);
      const int b = nb.dest[k];
      if (a <= b) edges[{a, b}].push_back(nb.masks[k]);
    }
  }
  SqsGraph g;
  for (std::size_t i = 0; i < cd.representatives.size(); ++i) {
    g.vertices.push_back({static_cast<int>(i), cd.representatives[i], std::nullopt});
  }
  for (auto& [key, masks] : edges) g.edges.push_back({key.first, key.second, QuadrupleSet::from_masks(masks)});
  return g;
}

}  // namespace

SqsSystem::SqsSystem(QuadrupleSet blocks) : blocks_(std::move(blocks)), by_triple_(1U << 16, 0) {
  if (blocks_.size() != 140) {
    throw std::invalid_argument("SQS(16) needs 140 blocks, got " + std::to_string(blocks_.size()));
  }
  for (const auto& q : blocks_) {
    if (q[3] > 15) throw std::invalid_argument("SQS block index out of range");
    const std::uint16_t m = q.mask();
    for (std::size_t drop = 0; drop < 4; ++drop) {
      const auto t = static_cast<std::uint16_t>(m & ~(1U << q[drop]));
      if (by_triple_[t]) throw std::invalid_argument("triple covered twice in SQS");
      by_triple_[t] = m;
    }
  }
  // 140 blocks x 4 triples = 560 = C(16,3) with no repeats, so all are covered.
}

Quadruple SqsSystem::block_of(int a, int b, int c) const {
  if (a == b || b == c || a == c || a < 0 || b < 0 || c < 0 || a > 15 || b > 15 || c > 15) {
    throw std::invalid_argument("block_of: need three distinct points in [0,15]");
  }
  return Quadruple::from_mask(by_triple_[(1U << a) | (1U << b) | (1U << c)]);
}

std::vector<std::uint16_t> distance4_masks(const Code& c, std::uint16_t v) {
  std::vector<std::uint16_t> out;
  for (std::uint16_t w : c.bits()) {
    const auto d = static_cast<std::uint16_t>(w ^ v);
    if (std::popcount(d) == 4) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SqsSystem sqs_of(const Code& c, Word v) {
  if (c.length() != 16) throw std::invalid_argument("sqs_of: code length must be 16");
  if (!c.contains(v)) throw std::invalid_argument("sqs_of: word " + v.hex() + " is not a codeword");
  return SqsSystem(QuadrupleSet::from_masks(distance4_masks(c, v.bits())));
}

const SqsEdge* SqsGraph::edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                             [](const SqsEdge& e, const std::pair<int, int>& k) { return std::pair{e.a, e.b} < k; });
  if (it == edges.end() || it->a != a || it->b != b) return nullptr;
  return &*it;
}

std::vector<const SqsEdge*> SqsGraph::incident(int v) const {
  std::vector<const SqsEdge*> out;
  for (const auto& e : edges) {
    if (e.a == v || e.b == v) out.push_back(&e);
  }
  return out;
}

std::size_t SqsGraph::vertex_sum(int v) const {
  std::size_t s = 0;
  for (const auto* e : incident(v)) s += e->multiplicity();
  return s;
}

std::vector<std::vector<std::size_t>> SqsGraph::multiplicity_matrix() const {
  const std::size_t n = vertices.size();
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : edges) {
    m[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = e.multiplicity();
    m[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = e.multiplicity();
  }
  return m;
}

bool foldable(const Code& c, const LinearSpan& l) {
  const CosetDecomposition cd = cosets(c, l);
  std::vector<Neighbourhood> views;
  return coset_views(c, cd, views);
}

SqsGraph quotient_graph(const Code& c, const LinearSpan& l) { return quotient_graph(c, cosets(c, l)); }

SqsGraph quotient_graph(const Code& c, const CosetDecomposition& cd) {
  std::vector<Neighbourhood> views;
  if (!coset_views(c, cd, views)) throw FoldabilityError("code is not foldable over the given subspace");
  // Each label seen from the left end must also be seen from the right end.
  for (std::size_t u = 0; u < views.size(); ++u) {
    for (std::size_t k = 0; k < views[u].masks.size(); ++k) {
      const auto& back = views[static_cast<std::size_t>(views[u].dest[k])];
      auto it = std::lower_bound(back.masks.begin(), back.masks.end(), views[u].masks[k]);
      if (it == back.masks.end() || *it != views[u].masks[k] ||
          back.dest[static_cast<std::size_t>(it - back.masks.begin())] != static_cast<int>(u)) {
        throw FoldabilityError("edge label is not symmetric between cosets");
      }
    }
  }
  return graph_from_views(cd, views);
}

bool vertex_sum_check(const SqsGraph& g) {
  for (const auto& v : g.vertices) {
    if (g.vertex_sum(v.id) != 140) return false;
  }
  return true;
}

SqsGraph merge_quotient(const SqsGraph& fine, const Code& c, const CosetDecomposition& coarse) {
  std::vector<int> up(fine.vertices.size());
  for (const auto& v : fine.vertices) up[static_cast<std::size_t>(v.id)] = coarse.index_of(c, v.representative);
  const std::size_t n = coarse.count();
  std::vector<int> pick(n, -1);
  for (std::size_t i = 0; i < up.size(); ++i) {
    if (pick[static_cast<std::size_t>(up[i])] < 0) pick[static_cast<std::size_t>(up[i])] = static_cast<int>(i);
  }
  std::vector<std::map<int, QuadrupleSet>> view(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (pick[a] < 0) throw std::invalid_argument("merge_quotient: coarse coset without fine vertex");
    for (const auto* e : fine.incident(pick[a])) {
      const int other = e->a == pick[a] ? e->b : e->a;
      auto& slot = view[a][up[static_cast<std::size_t>(other)]];
      slot = slot | e->quadruples;
    }
  }
  SqsGraph g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back({static_cast<int>(i), coarse.representatives[i], std::nullopt});
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [b, qs] : view[a]) {
      if (static_cast<int>(a) > b) {
        if (view[static_cast<std::size_t>(b)].at(static_cast<int>(a)) != qs) {
          throw FoldabilityError("merge_quotient: inconsistent labels between merged vertices");
        }
        continue;
      }
      g.edges.push_back({static_cast<int>(a), b, qs});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const SqsEdge& x, const SqsEdge& y) {
    return std::pair{x.a, x.b} < std::pair{y.a, y.b};
  });
  return g;
}

}  // namespace pcl
