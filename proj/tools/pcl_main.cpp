#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcl/code_algebra.hpp"
#include "pcl/doubling.hpp"
#include "pcl/fano.hpp"
#include "pcl/io.hpp"
#include "pcl/parallel.hpp"
#include "pcl/partition_atlas.hpp"
#include "pcl/perfect_codes.hpp"
#include "pcl/pipeline.hpp"
#include "pcl/sts.hpp"
#include "pcl/theorem5.hpp"

namespace {

using namespace pcl;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_atomic(out, text);
}

void emit(const std::string& out, const json& j) { emit(out, j.dump(2) + "\n"); }

Code load_code(const std::string& path) { return code_from_json(read_json_file(path)); }

const PartitionClass& class_by_id(const Classification& c, int id) {
  if (id < 0 || id >= static_cast<int>(c.classes.size())) {
    throw std::invalid_argument("class id " + std::to_string(id) + " outside [0," + std::to_string(c.classes.size() - 1) + "]");
  }
  return c.classes[static_cast<std::size_t>(id)];
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("pair '" + item + "' must look like 3:5");
    out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect codes, partitions, doubling and SQS-graph analysis"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides PCL_THREADS)");

  // perfect-codes enumerate
  auto* pc = app.add_subcommand("perfect-codes", "Perfect codes of length 7");
  pc->require_subcommand(1);
  auto* pc_enum = pc->add_subcommand("enumerate", "All 240 codes as a JSON array");
  std::string pc_out;
  pc_enum->add_option("--out", pc_out, "Output file (default stdout)");

  // partitions enumerate|classify
  auto* parts = app.add_subcommand("partitions", "Perfect partitions");
  parts->require_subcommand(1);
  auto* parts_enum = parts->add_subcommand("enumerate", "Enumerate and classify into an atlas");
  int parts_length = 7;
  std::string parts_out, parts_alias;
  parts_enum->add_option("--length", parts_length, "7 or 8")->check(CLI::IsMember({7, 8}));
  parts_enum->add_option("--out", parts_out, "Atlas JSON (default stdout)");
  parts_enum->add_option("--aliases", parts_alias, "Alias file mapping ordinals to labels")->check(CLI::ExistingFile);
  auto* parts_cls = parts->add_subcommand("classify", "Class id of every representative in an atlas file");
  std::string parts_in;
  parts_cls->add_option("file", parts_in, "Atlas JSON")->required()->check(CLI::ExistingFile);

  // double
  auto* dbl = app.add_subcommand("double", "Doubling of two length-8 partition classes");
  int dbl_src = 0, dbl_dst = 0;
  std::string dbl_sigma = "01234567", dbl_out;
  bool dbl_scan = false;
  std::size_t dbl_sample = 0;
  std::uint64_t dbl_seed = 1;
  dbl->add_option("--source", dbl_src, "Length-8 class id of the left factor")->required();
  dbl->add_option("--target", dbl_dst, "Length-8 class id of the right factor")->required();
  dbl->add_option("--sigma", dbl_sigma, "Permutation as 8 digits");
  dbl->add_option("--out", dbl_out, "Code JSON (default stdout)");
  dbl->add_flag("--scan-sigma", dbl_scan, "One CSV row (sigma, rank, kernel) per permutation");
  dbl->add_option("--sample", dbl_sample, "Scan only N seeded random permutations");
  dbl->add_option("--seed", dbl_seed, "Seed for --sample");

  // analyze
  auto* an = app.add_subcommand("analyze", "Rank, kernel, cosets and the SQS-graph of a code");
  std::string an_in, an_out;
  an->add_option("code", an_in, "Code JSON")->required()->check(CLI::ExistingFile);
  an->add_option("--out", an_out, "Full analysis JSON");

  // sts-types
  auto* st = app.add_subcommand("sts-types", "Type tuples per vertex over the kernel");
  std::string st_in, st_csv;
  st->add_option("code", st_in, "Code JSON")->required()->check(CLI::ExistingFile);
  st->add_option("--csv", st_csv, "Pasch profiles as CSV");

  // verify-theorem5
  auto* vt = app.add_subcommand("verify-theorem5", "Structure checks on the SQS-graph over the kernel");
  std::string vt_in, vt_report;
  bool vt_graph = false;
  vt->add_option("input", vt_in, "Code JSON, or graph JSON with --graph")->required()->check(CLI::ExistingFile);
  vt->add_option("--report", vt_report, "Report JSON (default stdout)");
  vt->add_flag("--graph", vt_graph, "Input is a graph JSON over the kernel");

  // fano dump
  auto* fano = app.add_subcommand("fano", "Quadruple families and named pair-partitions");
  fano->require_subcommand(1);
  auto* fano_dump = fano->add_subcommand("dump", "Print families and registry");

  // export
  auto* ex = app.add_subcommand("export", "Export the SQS-graph over the kernel");
  std::string ex_in, ex_format = "json", ex_out;
  ex->add_option("code", ex_in, "Code JSON")->required()->check(CLI::ExistingFile);
  ex->add_option("--format", ex_format, "dot, csv or json")->check(CLI::IsMember({"dot", "csv", "json"}));
  ex->add_option("--out", ex_out, "Output file (default stdout)");

  // pipeline
  auto* pl = app.add_subcommand("pipeline", "Atlases, sigma scan, analysis and reports");
  RunConfig cfg;
  std::string pl_out = "pcl-out", pl_pairs, pl_sigmas, pl_alias;
  std::size_t pl_sample = 0;
  pl->add_option("--out-dir", pl_out, "Artifact directory");
  pl->add_option("--pairs", pl_pairs, "Class pairs to scan, e.g. 0:0,0:3");
  pl->add_option("--sample", pl_sample, "Scan N seeded random permutations per pair");
  pl->add_option("--seed", cfg.seed, "Seed for --sample");
  pl->add_option("--sigmas", pl_sigmas, "Explicit comma separated permutations");
  pl->add_option("--kappas", cfg.kappas, "Kernel dimensions to look for")->delimiter(',');
  pl->add_option("--time-box", cfg.time_box_seconds, "Search time limit in seconds");
  pl->add_option("--aliases", pl_alias, "Alias file for length-8 ordinals")->check(CLI::ExistingFile);
  pl->add_option("-v,--verbosity", cfg.verbosity, "0 quiet, 1 stages, 2 notes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (threads > 0) setenv("PCL_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (pc_enum->parsed()) {
      std::vector<Code> codes;
      for (const auto& p : enumerate_perfect7()) codes.push_back(p.code);
      emit(pc_out, codes_to_json(codes));
    } else if (parts_enum->parsed()) {
      Classification c = parts_length == 7 ? atlas7() : atlas8();
      if (!parts_alias.empty()) apply_aliases(c, load_alias_file(parts_alias));
      emit(parts_out, atlas_to_json(c));
    } else if (parts_cls->parsed()) {
      const auto entries = atlas_from_json(read_json_file(parts_in));
      if (entries.empty()) throw std::invalid_argument("atlas has no classes");
      const int n = entries.front().representative[0].length();
      json out = json::array();
      if (n == 7) {
        std::vector<PerfectPartition> ps;
        for (const auto& e : entries) ps.emplace_back(e.representative);
        const Classification ref = atlas7();
        for (const auto& p : ps) {
          const std::string key = canonical_form(p);
          for (const auto& k : ref.classes) {
            if (k.canonical == key) out.push_back(k.id);
          }
        }
      } else if (n == 8) {
        std::vector<ExtendedPartition> ps;
        for (const auto& e : entries) ps.emplace_back(e.representative);
        const Classification ref = atlas8();
        for (const auto& p : ps) {
          const std::string key = canonical_form(p);
          for (const auto& k : ref.classes) {
            if (k.canonical == key) out.push_back(k.id);
          }
        }
      } else {
        throw std::invalid_argument("atlas codes must have length 7 or 8");
      }
      emit("", json{{"classOf", out}});
    } else if (dbl->parsed()) {
      const Classification a8 = atlas8();
      const ExtendedPartition src(class_by_id(a8, dbl_src).representative);
      const ExtendedPartition dst(class_by_id(a8, dbl_dst).representative);
      if (dbl_scan) {
        const auto sigmas = dbl_sample > 0 ? sample_sigmas(dbl_sample, dbl_seed) : all_sigmas();
        std::vector<SigmaRow> rows(sigmas.size());
        parallel_for(sigmas.size(), [&](std::size_t i) { rows[i] = sigma_row(src, dst, sigmas[i]); });
        std::ostringstream os;
        os << "sigma,rank,kernelDim\n";
        for (const auto& r : rows) os << sigma_string(r.sigma) << "," << r.rank << "," << r.kernel_dim << "\n";
        emit(dbl_out, os.str());
      } else {
        emit(dbl_out, code_to_json(doubling({src, dst, parse_sigma(dbl_sigma)})));
      }
    } else if (an->parsed()) {
      const CodeAnalysis a = analyze_code(load_code(an_in));
      std::cout << json{{"rank", a.rank}, {"kernelDim", a.kernel_dim}, {"cosetCount", a.coset_count}}.dump() << "\n";
      if (!an_out.empty()) write_json_atomic(an_out, analysis_to_json(a));
    } else if (st->parsed()) {
      const CodeAnalysis a = analyze_code(load_code(st_in), false);
      for (const auto& v : a.graph.vertices) {
        std::cout << hex_of(v.representative, 16) << " " << (v.sts_tuple ? render_tuple(*v.sts_tuple) : "unknown") << "\n";
      }
      for (const auto& u : a.unknown_profiles) std::cout << "off-table profile " << u << "\n";
      if (a.homogeneity) {
        std::cout << "sqs-homogeneous " << a.homogeneity->sqs_homogeneous << " sts-homogeneous "
                  << a.homogeneity->sts_homogeneous << "\n";
      }
      if (!st_csv.empty()) {
        std::ostringstream os;
        os << "vertex,coordinate,type,total,perPoint\n";
        for (std::size_t v = 0; v < a.profiles.size(); ++v) {
          for (std::size_t i = 0; i < 16; ++i) {
            const auto& p = a.profiles[v][i];
            const auto t = classify_type(p);
            std::string pts;
            for (int x : p.per_point) pts += (pts.empty() ? "" : " ") + std::to_string(x);
            os << v << "," << hex_of(static_cast<std::uint16_t>(i), 1) << "," << (t ? std::string(1, type_letter(*t)) : "?")
               << "," << p.total << "," << pts << "\n";
          }
        }
        write_text_atomic(st_csv, os.str());
      }
      return a.unknown_profiles.empty() ? 0 : 1;
    } else if (vt->parsed()) {
      StructureReport rep;
      if (vt_graph) {
        const SqsGraph g = graph_from_json(read_json_file(vt_in));
        rep = report_from_graph(g, kappa_of_graph(g));
      } else {
        rep = full_report(load_code(vt_in));
      }
      emit(vt_report, report_to_json(rep));
      std::cerr << "kappa " << rep.kappa << ": " << verdict_name(rep.overall) << "\n";
      for (const auto& n : rep.notes) std::cerr << "  " << n << "\n";
      return rep.pass ? 0 : 1;
    } else if (fano_dump->parsed()) {
      for (const auto& [name, set] : fano_families()) std::cout << name << " (" << set.size() << "): " << set.str() << "\n";
      for (const auto& [name, p] : partition_registry()) std::cout << name << " " << p.str() << "\n";
    } else if (ex->parsed()) {
      const CodeAnalysis a = analyze_code(load_code(ex_in), false);
      if (ex_format == "dot") emit(ex_out, graph_dot(a.graph));
      else if (ex_format == "csv") emit(ex_out, graph_csv(a.graph));
      else emit(ex_out, graph_to_json(a.graph));
    } else if (pl->parsed()) {
      cfg.out_dir = pl_out;
      cfg.threads = threads;
      if (!pl_alias.empty()) cfg.alias_file = pl_alias;
      if (!pl_pairs.empty()) cfg.pairs = parse_pairs(pl_pairs);
      if (!pl_sigmas.empty()) {
        cfg.sigma_mode = SigmaMode::list;
        std::stringstream ss(pl_sigmas);
        std::string s;
        while (std::getline(ss, s, ',')) cfg.sigmas.push_back(parse_sigma(s));
      } else if (pl_sample > 0) {
        cfg.sigma_mode = SigmaMode::sample;
        cfg.sample = pl_sample;
      }
      return run_pipeline(cfg, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
