#include "pcl/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "pcl/code_algebra.hpp"
#include "pcl/parallel.hpp"
#include "pcl/perfect_codes.hpp"
#include "pcl/theorem5.hpp"

namespace pcl {

namespace {

std::string mode_name(SigmaMode m) {
  switch (m) {
    case SigmaMode::exhaustive: return "exhaustive";
    case SigmaMode::sample: return "sample";
    case SigmaMode::list: return "list";
  }
  return "exhaustive";
}

ExtendedPartition partition_of(const PartitionClass& k) { return ExtendedPartition(k.representative); }

// Runs fn, prefixing any error with the stage name.
template <class F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("[") + name + "] " + e.what());
  }
}

}  // namespace

void RunConfig::validate() const {
  if (out_dir.empty()) throw std::invalid_argument("output directory is empty");
  if (sigma_mode == SigmaMode::sample && sample < 1) throw std::invalid_argument("sample size must be at least 1");
  if (sigma_mode == SigmaMode::list && sigmas.empty()) throw std::invalid_argument("sigma list is empty");
  for (const auto& s : sigmas) {
    if (!is_permutation(s)) throw std::invalid_argument("sigma " + sigma_string(s) + " is not a permutation");
  }
  for (int k : kappas) {
    if (k < 5 || k > 9) throw std::invalid_argument("wanted kappa " + std::to_string(k) + " outside [5,9]");
  }
  if (time_box_seconds <= 0) throw std::invalid_argument("time box must be positive");
}

std::vector<Sigma> all_sigmas() {
  std::vector<Sigma> out;
  out.reserve(40320);
  Sigma s = identity_sigma();
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::vector<Sigma> sample_sigmas(std::size_t n, std::uint64_t seed) {
  n = std::min<std::size_t>(n, 40320);
  std::mt19937_64 rng(seed);
  std::set<Sigma> seen;
  std::vector<Sigma> out;
  while (out.size() < n) {
    Sigma s = identity_sigma();
    std::shuffle(s.begin(), s.end(), rng);
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

std::vector<Sigma> sigmas_for(const RunConfig& cfg) {
  switch (cfg.sigma_mode) {
    case SigmaMode::exhaustive: return all_sigmas();
    case SigmaMode::sample: return sample_sigmas(cfg.sample, cfg.seed);
    case SigmaMode::list: return cfg.sigmas;
  }
  return all_sigmas();
}

SigmaRow sigma_row(const ExtendedPartition& source, const ExtendedPartition& target, const Sigma& sigma) {
  const Code c = normalize(doubling({source, target, sigma})).first;
  return {sigma, rank(c), kernel(c).dimension()};
}

SearchResult kappa_search(const Classification& atlas8, const RunConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const int n = static_cast<int>(atlas8.classes.size());
  std::vector<std::pair<int, int>> pairs = cfg.pairs;
  if (pairs.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("class pair out of range");
  }
  const std::vector<Sigma> sigmas = sigmas_for(cfg);
  std::set<int> wanted(cfg.kappas.begin(), cfg.kappas.end());

  SearchResult res;
  constexpr std::size_t kChunk = 512;
  for (const auto& [a, b] : pairs) {
    if (wanted.empty() || res.timed_out) break;
    const ExtendedPartition src = partition_of(atlas8.classes[static_cast<std::size_t>(a)]);
    const ExtendedPartition dst = partition_of(atlas8.classes[static_cast<std::size_t>(b)]);
    res.pairs_scanned.emplace_back(a, b);
    for (std::size_t lo = 0; lo < sigmas.size() && !wanted.empty(); lo += kChunk) {
      const std::size_t hi = std::min(sigmas.size(), lo + kChunk);
      std::vector<int> dims(hi - lo);
      parallel_for(
          hi - lo,
          [&](std::size_t i) {
            const Code c = normalize(doubling({src, dst, sigmas[lo + i]})).first;
            dims[i] = kernel(c).dimension();
          },
          cfg.threads);
      res.evaluated += hi - lo;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (wanted.erase(dims[i]) == 0) continue;
        const SigmaRow row = sigma_row(src, dst, sigmas[lo + i]);
        res.found.push_back({dims[i], a, b, sigmas[lo + i], row.rank});
      }
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (!wanted.empty() && elapsed > cfg.time_box_seconds) {
        res.timed_out = true;
        break;
      }
    }
  }
  std::sort(res.found.begin(), res.found.end(), [](const FoundCode& x, const FoundCode& y) { return x.kappa < y.kappa; });
  res.missing.assign(wanted.begin(), wanted.end());
  return res;
}

CodeAnalysis analyze_code(const Code& c, bool sweep_all_codewords) {
  if (c.length() != 16) throw std::invalid_argument("analyze: code length must be 16");
  if (!is_extended_perfect(c)) throw std::invalid_argument("analyze: not an extended perfect code");
  CodeAnalysis a;
  a.code = normalize(c).first;
  a.rank = rank(a.code);
  const LinearSpan k = kernel(a.code);
  a.kernel_dim = k.dimension();
  const CosetDecomposition cd = cosets(a.code, k);
  a.coset_count = cd.count();

  // SqsSystem validates 140 blocks covering every triple once.
  std::vector<Word> probe;
  if (sweep_all_codewords) {
    probe = a.code.words();
  } else {
    for (std::uint16_t r : cd.representatives) probe.emplace_back(16, r);
  }
  a.sqs_ok = true;
  for (const Word& w : probe) {
    try {
      (void)sqs_of(a.code, w);
    } catch (const std::exception&) {
      a.sqs_ok = false;
      break;
    }
  }

  a.foldable = foldable(a.code, k);
  a.graph = quotient_graph(a.code, cd);

  std::array<Code, 16> punctured;
  for (int i = 0; i < 16; ++i) punctured[static_cast<std::size_t>(i)] = puncture(a.code, i);
  const std::size_t nv = a.graph.vertices.size();
  a.profiles.resize(nv);
  std::vector<std::array<std::optional<int>, 16>> types(nv);
  parallel_for(nv, [&](std::size_t v) {
    const std::uint16_t rep = a.graph.vertices[v].representative;
    for (int i = 0; i < 16; ++i) {
      const auto& p = punctured[static_cast<std::size_t>(i)];
      const PaschProfile prof = pasch_profile(sts_of(p, Word(15, puncture_bits(rep, i))));
      a.profiles[v][static_cast<std::size_t>(i)] = prof;
      types[v][static_cast<std::size_t>(i)] = classify_type(prof);
    }
  });
  std::set<std::string> unknown;
  std::vector<std::array<int, 16>> tuples;
  for (std::size_t v = 0; v < nv; ++v) {
    std::array<int, 16> t{};
    bool known = true;
    for (std::size_t i = 0; i < 16; ++i) {
      if (types[v][i]) t[i] = *types[v][i];
      else {
        known = false;
        unknown.insert(a.profiles[v][i].str());
      }
    }
    if (known) {
      a.graph.vertices[v].sts_tuple = t;
      tuples.push_back(t);
    }
  }
  a.unknown_profiles.assign(unknown.begin(), unknown.end());
  if (unknown.empty()) a.homogeneity = homogeneity(tuples);
  return a;
}

json analysis_to_json(const CodeAnalysis& a) {
  json vs = json::array();
  for (std::size_t v = 0; v < a.graph.vertices.size(); ++v) {
    const auto& x = a.graph.vertices[v];
    json profiles = json::array();
    for (const auto& p : a.profiles[v]) profiles.push_back(p.str());
    json o{{"id", x.id}, {"representative", hex_of(x.representative, 16)}};
    if (x.sts_tuple) o["stsTuple"] = render_tuple(*x.sts_tuple);
    o["profiles"] = std::move(profiles);
    vs.push_back(std::move(o));
  }
  json out{{"rank", a.rank},
           {"kernelDim", a.kernel_dim},
           {"cosetCount", a.coset_count},
           {"sqsOk", a.sqs_ok},
           {"foldable", a.foldable},
           {"unknownProfiles", a.unknown_profiles}};
  if (a.homogeneity) {
    out["sqsHomogeneous"] = a.homogeneity->sqs_homogeneous;
    out["stsHomogeneous"] = a.homogeneity->sts_homogeneous;
  }
  out["vertices"] = std::move(vs);
  out["graph"] = graph_to_json(a.graph);
  return out;
}

int run_pipeline(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto& out = cfg.out_dir;
  auto say = [&](int level, const std::string& msg) {
    if (cfg.verbosity >= level) log << msg << "\n";
  };

  stage("perfect-codes", [&] {
    std::vector<Code> codes;
    for (const auto& p : enumerate_perfect7()) codes.push_back(p.code);
    write_json_atomic(out / "perfect_codes.json", codes_to_json(codes));
    say(1, "perfect-codes: " + std::to_string(codes.size()) + " codes of length 7");
  });

  Classification a8 = stage("partitions", [&] {
    Classification a7 = atlas7();
    Classification a8 = atlas8();
    if (cfg.alias_file) apply_aliases(a8, load_alias_file(*cfg.alias_file));
    write_json_atomic(out / "atlas7.json", atlas_to_json(a7));
    write_json_atomic(out / "atlas8.json", atlas_to_json(a8));
    say(1, "partitions: " + std::to_string(a7.classes.size()) + " classes of length 7, " +
               std::to_string(a8.classes.size()) + " of length 8");
    return a8;
  });

  json summary;
  summary["seed"] = cfg.seed;
  summary["sigmaMode"] = mode_name(cfg.sigma_mode);

  stage("linear", [&] {
    const std::string key = canonical_form(extended_hamming_coset_partition());
    auto it = std::find_if(a8.classes.begin(), a8.classes.end(), [&](const PartitionClass& k) { return k.canonical == key; });
    if (it == a8.classes.end()) throw std::logic_error("linear class missing from the atlas");
    const ExtendedPartition lin = partition_of(*it);
    const CodeAnalysis an = analyze_code(doubling({lin, lin, identity_sigma()}), false);
    json j{{"class", it->id}, {"rank", an.rank}, {"kernelDim", an.kernel_dim}};
    if (an.kernel_dim == 11) {
      j["status"] = "linear, kappa=11, skipped Theorem-5";
    } else {
      j["status"] = "unexpected kernel dimension";
    }
    if (!an.graph.vertices.empty() && an.graph.vertices[0].sts_tuple) j["stsTuple"] = render_tuple(*an.graph.vertices[0].sts_tuple);
    j["profile"] = an.profiles.at(0)[0].str();
    say(1, "linear: class " + std::to_string(it->id) + ", rank " + std::to_string(an.rank) + ", kernel " +
               std::to_string(an.kernel_dim) + ", skipped Theorem-5");
    summary["linear"] = std::move(j);
  });

  const SearchResult sr = stage("double", [&] { return kappa_search(a8, cfg); });
  {
    json found = json::array();
    for (const auto& f : sr.found) {
      found.push_back(json{{"kappa", f.kappa}, {"source", f.source}, {"target", f.target}, {"sigma", sigma_string(f.sigma)}, {"rank", f.rank}});
    }
    json pairs = json::array();
    for (const auto& [x, y] : sr.pairs_scanned) pairs.push_back(json::array({x, y}));
    json s{{"seed", cfg.seed},
           {"sigmaMode", mode_name(cfg.sigma_mode)},
           {"evaluated", sr.evaluated},
           {"timedOut", sr.timed_out},
           {"pairsScanned", std::move(pairs)},
           {"found", std::move(found)},
           {"missing", sr.missing}};
    write_json_atomic(out / "search.json", s);
    summary["search"] = std::move(s);
    say(1, "double: " + std::to_string(sr.evaluated) + " sigmas evaluated, " + std::to_string(sr.found.size()) +
               " kappa values found" + (sr.timed_out ? " (time box expired)" : ""));
  }

  bool ok = true;
  json codes = json::array();
  for (const auto& f : sr.found) {
    const std::string tag = "k" + std::to_string(f.kappa);
    const Code c = doubling({partition_of(a8.classes[static_cast<std::size_t>(f.source)]),
                             partition_of(a8.classes[static_cast<std::size_t>(f.target)]), f.sigma});
    const CodeAnalysis an = stage("analyze", [&] { return analyze_code(c); });
    write_json_atomic(out / ("code_" + tag + ".json"), code_to_json(an.code));
    write_json_atomic(out / ("analysis_" + tag + ".json"), analysis_to_json(an));
    write_json_atomic(out / ("graph_" + tag + ".json"), graph_to_json(an.graph));
    const StructureReport rep = stage("verify-theorem5", [&] { return full_report(an.code); });
    write_json_atomic(out / ("report_" + tag + ".json"), report_to_json(rep));
    const bool good = rep.pass && an.sqs_ok && an.foldable && an.unknown_profiles.empty();
    ok = ok && good;
    codes.push_back(json{{"kappa", f.kappa},
                         {"source", f.source},
                         {"target", f.target},
                         {"sigma", sigma_string(f.sigma)},
                         {"rank", an.rank},
                         {"sqsOk", an.sqs_ok},
                         {"foldable", an.foldable},
                         {"unknownProfiles", an.unknown_profiles},
                         {"overall", verdict_name(rep.overall)},
                         {"pass", rep.pass}});
    say(1, "kappa " + std::to_string(f.kappa) + ": pair (" + std::to_string(f.source) + "," + std::to_string(f.target) +
               ") sigma " + sigma_string(f.sigma) + ", rank " + std::to_string(an.rank) + ", theorem-5 " +
               verdict_name(rep.overall) + (an.unknown_profiles.empty() ? "" : ", off-table STS profiles"));
    for (const auto& note : rep.notes) say(2, "  " + note);
  }
  summary["codes"] = std::move(codes);
  for (int k : {8, 9}) {
    if (std::find(cfg.kappas.begin(), cfg.kappas.end(), k) != cfg.kappas.end() &&
        std::find(sr.missing.begin(), sr.missing.end(), k) != sr.missing.end()) {
      ok = false;
    }
  }
  summary["pass"] = ok;
  write_json_atomic(out / "summary.json", summary);
  return ok ? 0 : 1;
}

}  // namespace pcl
