#pragma once

// End-to-end runs: atlases, sigma scans over class pairs, per-code analysis,
// type tuples and structure reports.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcl/doubling.hpp"
#include "pcl/io.hpp"
#include "pcl/sts.hpp"

namespace pcl {

enum class SigmaMode { exhaustive, sample, list };

struct RunConfig {
  std::filesystem::path out_dir = "pcl-out";
  std::optional<std::filesystem::path> alias_file;  // labels for length-8 ordinals
  // Class pairs (source, target) to scan; empty means all i <= j in ordinal order.
  std::vector<std::pair<int, int>> pairs;
  SigmaMode sigma_mode = SigmaMode::exhaustive;
  std::size_t sample = 1000;
  std::uint64_t seed = 1;
  std::vector<Sigma> sigmas;  // for SigmaMode::list
  std::vector<int> kappas{5, 6, 7, 8, 9};
  double time_box_seconds = 1800;
  int threads = 0;
  int verbosity = 1;

  // Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

// All 8! permutations in lexicographic order.
std::vector<Sigma> all_sigmas();
// n distinct permutations drawn with a seeded generator, in draw order.
std::vector<Sigma> sample_sigmas(std::size_t n, std::uint64_t seed);
std::vector<Sigma> sigmas_for(const RunConfig& cfg);

struct SigmaRow {
  Sigma sigma{};
  int rank = 0;
  int kernel_dim = 0;
};

SigmaRow sigma_row(const ExtendedPartition& source, const ExtendedPartition& target, const Sigma& sigma);

struct FoundCode {
  int kappa = 0;
  int source = 0;
  int target = 0;
  Sigma sigma{};
  int rank = 0;
};

struct SearchResult {
  std::vector<FoundCode> found;  // ascending kappa
  std::vector<int> missing;
  std::size_t evaluated = 0;
  std::vector<std::pair<int, int>> pairs_scanned;
  bool timed_out = false;
};

// First code per wanted kappa, scanning pairs in order and sigmas in the
// configured order. Deterministic unless the time box expires.
SearchResult kappa_search(const Classification& atlas8, const RunConfig& cfg);

struct CodeAnalysis {
  Code code;  // normalized
  int rank = 0;
  int kernel_dim = 0;
  std::size_t coset_count = 0;
  bool sqs_ok = false;    // every codeword's SQS has 140 blocks over all 560 triples
  bool foldable = false;  // over the kernel
  SqsGraph graph;         // over the kernel; type tuples set when all are known
  std::vector<std::array<PaschProfile, 16>> profiles;  // per vertex
  std::vector<std::string> unknown_profiles;           // distinct off-table profiles
  std::optional<Homogeneity> homogeneity;
};

CodeAnalysis analyze_code(const Code& c, bool sweep_all_codewords = true);
json analysis_to_json(const CodeAnalysis& a);

// Runs every stage and writes artifacts into cfg.out_dir. Returns the exit
// status: 0 when every analysed code in the theorem range passes.
int run_pipeline(const RunConfig& cfg, std::ostream& log);

}  // namespace pcl
