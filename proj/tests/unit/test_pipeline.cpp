#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcl/pipeline.hpp"

using namespace pcl;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("sigma sources") {
  const auto all = all_sigmas();
  CHECK(all.size() == 40320);
  CHECK(sigma_string(all.front()) == "01234567");
  CHECK(sigma_string(all.back()) == "76543210");
  const auto a = sample_sigmas(50, 7), b = sample_sigmas(50, 7), c = sample_sigmas(50, 8);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(std::set<Sigma>(a.begin(), a.end()).size() == 50);
  CHECK(sample_sigmas(50000, 1).size() == 40320);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.sigma_mode = SigmaMode::sample;
  cfg.sample = 0;
  CHECK_THROWS(cfg.validate());
  cfg.sample = 3;
  cfg.kappas = {4};
  CHECK_THROWS(cfg.validate());
  cfg.kappas = {8};
  cfg.sigma_mode = SigmaMode::list;
  CHECK_THROWS(cfg.validate());
  cfg.sigmas = {Sigma{0, 0, 1, 2, 3, 4, 5, 6}};
  CHECK_THROWS(cfg.validate());
  cfg.out_dir.clear();
  cfg.sigmas = {identity_sigma()};
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("search on one pair") {
  RunConfig cfg;
  cfg.pairs = {{0, 0}};
  cfg.sigma_mode = SigmaMode::sample;
  cfg.sample = 300;
  cfg.seed = 5;
  cfg.kappas = {8, 9};
  const SearchResult a = kappa_search(fx::atlas8(), cfg);
  const SearchResult b = kappa_search(fx::atlas8(), cfg);
  REQUIRE(a.found.size() == 2);
  CHECK(a.missing.empty());
  CHECK(a.found[0].kappa == 8);
  CHECK(a.found[1].kappa == 9);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.found[i].sigma == b.found[i].sigma);
    CHECK(sigma_row(ExtendedPartition(fx::atlas8().classes[0].representative),
                    ExtendedPartition(fx::atlas8().classes[0].representative), a.found[i].sigma)
              .kernel_dim == a.found[i].kappa);
  }
  cfg.pairs = {{0, 12}};
  CHECK_THROWS(kappa_search(fx::atlas8(), cfg));
}

TEST_CASE("analysis of a kappa 7 code") {
  const CodeAnalysis a = analyze_code(fx::kappa_code(7));
  CHECK(a.kernel_dim == 7);
  CHECK(a.rank == 13);
  CHECK(a.coset_count == 16);
  CHECK(a.sqs_ok);
  CHECK(a.foldable);
  CHECK(a.unknown_profiles.empty());
  CHECK_THROWS(analyze_code(Code(16, std::vector<std::uint16_t>{0, 3})));
}

TEST_CASE("pipeline output is deterministic") {
  RunConfig cfg;
  cfg.pairs = {{0, 0}};
  cfg.sigma_mode = SigmaMode::sample;
  cfg.sample = 200;
  cfg.seed = 9;
  cfg.kappas = {8, 9};
  cfg.verbosity = 0;
  const fs::path root = fs::temp_directory_path() / "pcl_pipeline_det";
  fs::remove_all(root);
  std::ostringstream log;
  cfg.out_dir = root / "a";
  CHECK(run_pipeline(cfg, log) == 0);
  cfg.out_dir = root / "b";
  CHECK(run_pipeline(cfg, log) == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(root / "a")) {
    ++files;
    CHECK(slurp(e.path()) == slurp(root / "b" / e.path().filename()));
  }
  CHECK(files == 13);
  fs::remove_all(root);
}
