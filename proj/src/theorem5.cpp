#include "pcl/theorem5.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pcl/code_algebra.hpp"
#include "pcl/doubling.hpp"

namespace pcl {

namespace {

using Masks = std::vector<std::uint16_t>;

bool left_only(std::uint16_t m) { return (m >> 8) == 0; }
bool right_only(std::uint16_t m) { return (m & 0xFF) == 0; }

std::uint16_t swap_mask(std::uint16_t m) { return static_cast<std::uint16_t>((m >> 8) | (m << 8)); }

Masks sorted(Masks m) {
  std::sort(m.begin(), m.end());
  return m;
}

Masks masks_of(const QuadrupleSet& s) { return sorted(s.masks()); }

struct Split {
  Masks left, right, cross;
};

Split split(const QuadrupleSet& s, bool swapped) {
  Split out;
  for (std::uint16_t m : s.masks()) {
    if (swapped) m = swap_mask(m);
    if (left_only(m)) out.left.push_back(m);
    else if (right_only(m)) out.right.push_back(m);
    else out.cross.push_back(m);
  }
  out.left = sorted(out.left);
  out.right = sorted(out.right);
  out.cross = sorted(out.cross);
  return out;
}

Verdict min_verdict(Verdict a, Verdict b) { return static_cast<int>(a) < static_cast<int>(b) ? a : b; }

// Loop family for kappa, split into halves (the kappa-9 product is checked
// separately).
struct Expected {
  Masks left, right;
  std::vector<Masks> intra;  // sorted multiset of left-half families
  std::vector<std::string> intra_names;
};

Expected expected_for(int kappa) {
  Expected e;
  QuadrupleSet loop;
  switch (kappa) {
    case 9:
    case 8: loop = family("X") | family("Y") | family("Z"); break;
    case 7: loop = family("X'"); break;
    case 6: loop = family("Z'"); break;
    case 5: loop = family("Z_0"); break;
    default: throw KappaRangeError("kappa must be in [5,9]");
  }
  const Split s = split(loop, false);
  e.left = s.left;
  e.right = s.right;
  e.intra_names = expected_intra_families(kappa);
  for (const auto& n : e.intra_names) e.intra.push_back(masks_of(family(n)));
  std::sort(e.intra.begin(), e.intra.end());
  return e;
}

struct Observed {
  Split loop;
  std::vector<std::vector<Masks>> intra_left;       // per vertex, one entry per link
  std::vector<std::size_t> intra_right;             // per vertex, count
};

Observed observe(const SqsGraph& g, bool swapped) {
  Observed o;
  const SqsEdge* loop0 = g.edge(0, 0);
  o.loop = split(loop0 ? loop0->quadruples : QuadrupleSet{}, swapped);
  o.intra_left.resize(g.vertices.size());
  o.intra_right.assign(g.vertices.size(), 0);
  for (const auto& v : g.vertices) {
    for (const auto* e : g.incident(v.id)) {
      if (e->loop()) continue;
      const Split s = split(e->quadruples, swapped);
      if (!s.left.empty()) o.intra_left[static_cast<std::size_t>(v.id)].push_back(s.left);
      o.intra_right[static_cast<std::size_t>(v.id)] += s.right.size();
    }
    std::sort(o.intra_left[static_cast<std::size_t>(v.id)].begin(), o.intra_left[static_cast<std::size_t>(v.id)].end());
  }
  return o;
}

using Lut = std::array<std::uint8_t, 256>;

Lut byte_lut(const std::array<int, 8>& p) {
  Lut lut{};
  for (unsigned w = 0; w < 256; ++w) {
    unsigned img = 0;
    for (int i = 0; i < 8; ++i) {
      if ((w >> i) & 1U) img |= 1U << p[static_cast<std::size_t>(i)];
    }
    lut[w] = static_cast<std::uint8_t>(img);
  }
  return lut;
}

Masks map_low(const Masks& m, const Lut& lut) {
  Masks out;
  out.reserve(m.size());
  for (std::uint16_t x : m) out.push_back(lut[x & 0xFF]);
  return sorted(out);
}

Masks map_high(const Masks& m, const Lut& lut) {
  Masks out;
  out.reserve(m.size());
  for (std::uint16_t x : m) out.push_back(static_cast<std::uint16_t>(lut[x >> 8] << 8));
  return sorted(out);
}

bool intra_ok(const Observed& o, const Expected& e, const Lut& lut) {
  for (std::size_t v = 0; v < o.intra_left.size(); ++v) {
    if (o.intra_right[v] != 0) return false;
    if (o.intra_left[v].size() != e.intra.size()) return false;
    std::vector<Masks> mapped;
    for (const auto& s : o.intra_left[v]) mapped.push_back(map_low(s, lut));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != e.intra) return false;
  }
  return true;
}

// Finds left and right permutations matching the loop halves and the intra
// families, or none.
std::optional<Relabeling> search_relabeling(const SqsGraph& g, const Expected& e, bool with_intra) {
  for (bool swapped : {false, true}) {
    const Observed o = observe(g, swapped);
    if (o.loop.left.size() != e.left.size() || o.loop.right.size() != e.right.size()) continue;
    std::optional<std::array<int, 8>> left, right;
    std::array<int, 8> p{};
    std::iota(p.begin(), p.end(), 0);
    do {
      const Lut lut = byte_lut(p);
      if (map_low(o.loop.left, lut) != e.left) continue;
      if (with_intra && !intra_ok(o, e, lut)) continue;
      left = p;
      break;
    } while (std::next_permutation(p.begin(), p.end()));
    if (!left) continue;
    std::iota(p.begin(), p.end(), 0);
    do {
      if (map_high(o.loop.right, byte_lut(p)) != e.right) continue;
      right = p;
      break;
    } while (std::next_permutation(p.begin(), p.end()));
    if (!right) continue;
    Relabeling r;
    r.swapped = swapped;
    for (int i = 0; i < 16; ++i) {
      const int src = swapped ? i ^ 8 : i;  // coordinate after the optional swap
      r.perm[static_cast<std::size_t>(i)] =
          src < 8 ? (*left)[static_cast<std::size_t>(src)] : 8 + (*right)[static_cast<std::size_t>(src - 8)];
    }
    return r;
  }
  return std::nullopt;
}

bool is_identity(const Relabeling& r) {
  for (int i = 0; i < 16; ++i) {
    if (r.perm[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

QuadrupleSet apply(const QuadrupleSet& s, const std::optional<Relabeling>& r) {
  if (!r) return s;
  return relabel(s, r->perm);
}

QuadrupleSet cross_part(const QuadrupleSet& s) {
  Masks m;
  for (std::uint16_t x : s.masks()) {
    if (!left_only(x) && !right_only(x)) m.push_back(x);
  }
  return QuadrupleSet::from_masks(m);
}

QuadrupleSet intra_part(const QuadrupleSet& s) {
  Masks m;
  for (std::uint16_t x : s.masks()) {
    if (left_only(x) || right_only(x)) m.push_back(x);
  }
  return QuadrupleSet::from_masks(m);
}

// A full product hidden among the quarters of one link.
bool has_full_product(const std::vector<Quarter>& qs) {
  std::map<PairPartition, std::vector<unsigned>> lefts;
  for (const auto& q : qs) lefts[q.right].push_back((1U << q.left[0]) | (1U << q.left[1]));
  for (const auto& [right, ls] : lefts) {
    if (ls.size() < 4) continue;
    // Four pairwise disjoint left pairs among the group.
    const std::size_t n = ls.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d)
            if ((ls[a] | ls[b] | ls[c] | ls[d]) == 0xFF) return true;
  }
  return false;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::exact: return "exact";
    case Verdict::relabeled: return "relabeled";
    case Verdict::spectrum_only: return "spectrum-only";
    case Verdict::fail: return "fail";
  }
  return "fail";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "exact") return Verdict::exact;
  if (s == "relabeled") return Verdict::relabeled;
  if (s == "spectrum-only") return Verdict::spectrum_only;
  if (s == "fail") return Verdict::fail;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::size_t expected_loop_multiplicity(int kappa) {
  switch (kappa) {
    case 9: return 44;
    case 8: return 28;
    case 7: return 21;
    case 6: return 17;
    case 5: return 15;
    default: throw KappaRangeError("kappa must be in [5,9], got " + std::to_string(kappa));
  }
}

std::string expected_loop_family(int kappa) {
  switch (kappa) {
    case 9: return "XYZ+product";
    case 8: return "XYZ";
    case 7: return "X'";
    case 6: return "Z'";
    case 5: return "Z_0";
    default: throw KappaRangeError("kappa must be in [5,9], got " + std::to_string(kappa));
  }
}

std::vector<std::string> expected_intra_families(int kappa) {
  switch (kappa) {
    case 9:
    case 8: return {};
    case 7: return {"X"};
    case 6: return {"B'", "B", "A"};
    case 5: return {"A_1'", "B_0'", "B_1'", "B_1", "B_0", "A_1", "A_0"};
    default: throw KappaRangeError("kappa must be in [5,9], got " + std::to_string(kappa));
  }
}

int kappa_of_graph(const SqsGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0 || !std::has_single_bit(n) || n > 2048) throw std::invalid_argument("graph vertex count is not a power of two");
  return 11 - std::countr_zero(n);
}

std::vector<LoopVerdict> verify_loops(const SqsGraph& g, int kappa, std::optional<Relabeling>* found) {
  const std::size_t want = expected_loop_multiplicity(kappa);
  const Expected e = expected_for(kappa);
  std::vector<LoopVerdict> out;

  // Loops are the weight-4 kernel words, hence identical at every vertex.
  const SqsEdge* loop0 = g.edge(0, 0);
  const QuadrupleSet ref = loop0 ? loop0->quadruples : QuadrupleSet{};
  const Split ident = split(ref, false);
  const bool identity_loop = ident.left == e.left && ident.right == e.right;

  std::optional<Relabeling> r;
  if (!identity_loop || kappa <= 7) {
    r = search_relabeling(g, e, kappa <= 7);
    if (!r && kappa <= 7) r = search_relabeling(g, e, false);
    if (r && is_identity(*r)) r.reset();
  }
  if (found) *found = r;

  for (const auto& v : g.vertices) {
    LoopVerdict lv;
    lv.vertex = v.id;
    lv.expected = want;
    const SqsEdge* l = g.edge(v.id, v.id);
    lv.observed = l ? l->quadruples : QuadrupleSet{};
    lv.multiplicity = lv.observed.size();
    if (lv.observed != ref) {
      lv.verdict = Verdict::fail;
      lv.note = "loop differs from vertex 0";
      out.push_back(std::move(lv));
      continue;
    }
    if (lv.multiplicity != want) {
      lv.verdict = Verdict::fail;
      lv.note = "loop multiplicity " + std::to_string(lv.multiplicity) + ", expected " + std::to_string(want);
      out.push_back(std::move(lv));
      continue;
    }
    if (kappa == 9) {
      const auto prods = decompose_products(cross_part(lv.observed));
      if (!prods || prods->size() != 1) {
        lv.verdict = Verdict::fail;
        lv.note = "cross part of the loop is not a single product";
        out.push_back(std::move(lv));
        continue;
      }
      lv.product = prods->front();
    } else if (!ident.cross.empty()) {
      lv.verdict = Verdict::fail;
      lv.note = "loop carries cross quadruples";
      out.push_back(std::move(lv));
      continue;
    }
    if (identity_loop) {
      lv.verdict = Verdict::exact;
    } else if (r) {
      lv.verdict = Verdict::relabeled;
      if (r->swapped) lv.note = "halves exchanged";
    } else {
      lv.verdict = Verdict::spectrum_only;
      lv.note = "no half-preserving relabeling onto " + expected_loop_family(kappa);
    }
    out.push_back(std::move(lv));
  }
  return out;
}

std::vector<LinkVerdict> verify_intra_links(const SqsGraph& g, int kappa, const std::optional<Relabeling>& r) {
  const Expected e = expected_for(kappa);
  std::vector<LinkVerdict> out;
  for (const auto& edge : g.edges) {
    if (edge.loop()) continue;
    const QuadrupleSet part = intra_part(edge.quadruples);
    if (part.empty()) continue;
    LinkVerdict lv;
    lv.a = edge.a;
    lv.b = edge.b;
    lv.multiplicity = edge.multiplicity();
    lv.intra = part.size();
    if (kappa >= 8) {
      lv.verdict = Verdict::fail;
      lv.note = "intra-half quadruples on a link for kappa >= 8";
      out.push_back(std::move(lv));
      continue;
    }
    auto match = [&](const QuadrupleSet& s) -> std::optional<std::string> {
      for (const auto& n : e.intra_names) {
        if (family(n) == s) return n;
      }
      return std::nullopt;
    };
    if (auto n = match(part)) {
      lv.verdict = Verdict::exact;
      lv.intra_families.push_back(*n);
    } else if (auto n2 = r ? match(apply(part, r)) : std::nullopt) {
      lv.verdict = Verdict::relabeled;
      lv.intra_families.push_back(*n2);
    } else {
      const bool size_ok = std::any_of(e.intra_names.begin(), e.intra_names.end(),
                                       [&](const std::string& n) { return family(n).size() == part.size(); });
      lv.verdict = size_ok ? Verdict::spectrum_only : Verdict::fail;
      lv.note = "intra set " + part.str() + " matches no expected family";
    }
    out.push_back(std::move(lv));
  }
  return out;
}

std::vector<LinkVerdict> verify_cross_links(const SqsGraph& g, int kappa) {
  expected_loop_multiplicity(kappa);
  std::vector<LinkVerdict> out;
  for (const auto& edge : g.edges) {
    if (edge.loop()) continue;
    const QuadrupleSet part = cross_part(edge.quadruples);
    if (part.empty()) continue;
    LinkVerdict lv;
    lv.a = edge.a;
    lv.b = edge.b;
    lv.multiplicity = edge.multiplicity();
    lv.cross = part.size();
    if (kappa >= 8) {
      const std::size_t want = kappa == 9 ? 2 : 1;
      auto prods = decompose_products(part);
      if (prods && prods->size() == want) {
        lv.verdict = Verdict::exact;
        lv.products = *prods;
      } else {
        lv.verdict = Verdict::fail;
        lv.note = "expected " + std::to_string(want) + " whole product(s)";
      }
    } else {
      auto qs = decompose_quarters(part);
      if (!qs) {
        lv.verdict = Verdict::fail;
        lv.note = "cross quadruples do not split into quarters";
      } else if (has_full_product(*qs)) {
        lv.verdict = Verdict::fail;
        lv.quarters = *qs;
        lv.note = "link contains all four quarters of a product";
      } else {
        lv.verdict = Verdict::exact;
        lv.quarters = *qs;
      }
    }
    out.push_back(std::move(lv));
  }
  return out;
}

StructureReport report_from_graph(const SqsGraph& g, int kappa) {
  if (kappa < 5 || kappa > 9) throw KappaRangeError("kappa must be in [5,9], got " + std::to_string(kappa));
  StructureReport rep;
  rep.kappa = kappa;
  rep.vertices = g.vertices.size();
  rep.multiplicity = g.multiplicity_matrix();
  rep.vertex_sums = vertex_sum_check(g);

  std::optional<Relabeling> r;
  rep.loops = verify_loops(g, kappa, &r);
  rep.relabeling = r;
  rep.loop_level = Verdict::exact;
  for (const auto& l : rep.loops) rep.loop_level = min_verdict(rep.loop_level, l.verdict);

  const auto intra = verify_intra_links(g, kappa, r);
  const auto cross = verify_cross_links(g, kappa);
  rep.intra_level = Verdict::exact;
  for (const auto& l : intra) rep.intra_level = min_verdict(rep.intra_level, l.verdict);
  // Every vertex should carry the expected number of intra links.
  if (kappa <= 7) {
    const std::size_t want = expected_intra_families(kappa).size();
    for (const auto& v : g.vertices) {
      std::size_t n = 0;
      for (const auto& l : intra) n += (l.a == v.id || l.b == v.id) ? 1 : 0;
      if (n != want) {
        rep.intra_level = Verdict::fail;
        rep.notes.push_back("vertex " + std::to_string(v.id) + " has " + std::to_string(n) + " intra links, expected " +
                            std::to_string(want));
        break;
      }
    }
  }
  rep.cross_level = Verdict::exact;
  for (const auto& l : cross) rep.cross_level = min_verdict(rep.cross_level, l.verdict);

  // One verdict per edge: merge the intra and cross views.
  for (const auto& edge : g.edges) {
    if (edge.loop()) continue;
    LinkVerdict lv;
    lv.a = edge.a;
    lv.b = edge.b;
    lv.multiplicity = edge.multiplicity();
    lv.verdict = Verdict::exact;
    for (const auto& l : intra) {
      if (l.a == edge.a && l.b == edge.b) {
        lv.intra = l.intra;
        lv.intra_families = l.intra_families;
        lv.verdict = min_verdict(lv.verdict, l.verdict);
        lv.note = l.note;
      }
    }
    for (const auto& l : cross) {
      if (l.a == edge.a && l.b == edge.b) {
        lv.cross = l.cross;
        lv.products = l.products;
        lv.quarters = l.quarters;
        lv.verdict = min_verdict(lv.verdict, l.verdict);
        if (!l.note.empty()) lv.note += (lv.note.empty() ? "" : "; ") + l.note;
      }
    }
    rep.links.push_back(std::move(lv));
  }

  // Per vertex: 112 cross quadruples assembling into 7 products.
  for (const auto& v : g.vertices) {
    QuadrupleSet all;
    for (const auto* e : g.incident(v.id)) all = all | cross_part(e->quadruples);
    rep.cross_totals.push_back(all.size());
    const auto prods = decompose_products(all);
    rep.products_per_vertex.push_back(prods ? prods->size() : 0);
    if (all.size() != 112 || !prods || prods->size() != 7) {
      rep.cross_level = Verdict::fail;
      rep.notes.push_back("vertex " + std::to_string(v.id) + ": cross total " + std::to_string(all.size()) +
                          (prods ? ", " + std::to_string(prods->size()) + " products" : ", not a union of products"));
    }
  }

  // Loop plus intra links cover 28 quadruples at every vertex.
  for (const auto& v : g.vertices) {
    std::size_t n = 0;
    for (const auto* e : g.incident(v.id)) n += intra_part(e->quadruples).size();
    if (n != 28) {
      rep.intra_level = Verdict::fail;
      rep.notes.push_back("vertex " + std::to_string(v.id) + ": loop plus intra links hold " + std::to_string(n) +
                          " quadruples, expected 28");
      break;
    }
  }

  // Left-half support of a quadruple is 0, 2 or 4.
  for (const auto& e : g.edges) {
    for (std::uint16_t m : e.quadruples.masks()) {
      if (std::popcount(static_cast<unsigned>(m & 0xFF)) % 2 != 0) {
        rep.cross_level = Verdict::fail;
        rep.notes.push_back("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + "): quadruple " +
                            Quadruple::from_mask(m).hex() + " has odd left support");
        break;
      }
    }
  }

  rep.overall = min_verdict(rep.loop_level, min_verdict(rep.intra_level, rep.cross_level));
  if (!rep.vertex_sums) {
    rep.overall = Verdict::fail;
    for (const auto& v : g.vertices) {
      if (g.vertex_sum(v.id) != 140) {
        rep.notes.push_back("vertex " + std::to_string(v.id) + ": multiplicities sum to " +
                            std::to_string(g.vertex_sum(v.id)) + ", expected 140");
      }
    }
  }
  if (r && r->swapped) rep.notes.push_back("relabeling exchanges the two halves");
  rep.pass = rep.overall != Verdict::fail;
  return rep;
}

StructureReport full_report(const Code& c) {
  const Code z = normalize(c).first;
  const LinearSpan k = kernel(z);
  const int kappa = k.dimension();
  if (kappa < 5 || kappa > 9) throw KappaRangeError("kernel dimension " + std::to_string(kappa) + " is outside [5,9]");
  const CosetDecomposition cd = cosets(z, k);
  const SqsGraph g = quotient_graph(z, cd);
  StructureReport rep = report_from_graph(g, kappa);

  if (kappa == 9) {
    IndexTwoCheck chk;
    const SqsEdge* big = g.edge(0, 0);
    for (const LinearSpan& l : index2_subspaces(k)) {
      // Loop over L = weight-4 words of L.
      std::size_t w4 = 0;
      for (std::uint16_t x : l.elements()) w4 += std::popcount(x) == 4 ? 1 : 0;
      if (w4 != 28) continue;
      const SqsGraph gl = quotient_graph(z, l);
      bool ok = true;
      std::size_t edge16 = 0;
      for (const auto& v : gl.vertices) {
        const SqsEdge* loop = gl.edge(v.id, v.id);
        if (!loop || loop->multiplicity() != 28) ok = false;
        // The missing part of the big loop must be a product edge to the twin.
        std::size_t found = 0;
        for (const auto* e : gl.incident(v.id)) {
          if (e->loop()) continue;
          const int other = e->a == v.id ? e->b : e->a;
          if (cd.index_of(z, gl.vertices[static_cast<std::size_t>(other)].representative) ==
              cd.index_of(z, v.representative)) {
            const auto rec = recognize_product(e->quadruples);
            if (rec && rec->kind == Recognition::Kind::product) {
              ++found;
              edge16 = e->multiplicity();
            }
          }
        }
        if (found != 1) ok = false;
      }
      if (!ok) continue;
      chk.found = true;
      chk.dimension = l.dimension();
      chk.loop = 28;
      chk.product_edge = edge16;
      chk.merge_matches = merge_quotient(gl, z, cd) == g && big && big->multiplicity() == 44;
      break;
    }
    if (!chk.found || !chk.merge_matches) {
      rep.loop_level = Verdict::fail;
      rep.overall = Verdict::fail;
      rep.pass = false;
      rep.notes.push_back("no hyperplane of the kernel gives loop 28 plus a product edge merging into the loop");
    }
    rep.index_two = chk;
  }
  return rep;
}

}  // namespace pcl
