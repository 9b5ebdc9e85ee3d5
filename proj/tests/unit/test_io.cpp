#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcl/code_algebra.hpp"
#include "pcl/io.hpp"
#include "pcl/perfect_codes.hpp"
#include "pcl/pipeline.hpp"

using namespace pcl;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const char* name) {
  const fs::path p = fs::temp_directory_path() / ("pcl_io_" + std::string(name));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("code JSON") {
  const Code h = hamming7().code;
  const json j = code_to_json(h);
  CHECK(j["length"] == 7);
  CHECK(j["codewords"][0] == "00");
  CHECK(j["codewords"].size() == 16);
  CHECK(code_from_json(j) == h);
  const Code big = fx::kappa_code(8);
  CHECK(code_to_json(big)["codewords"][1].get<std::string>().size() == 4);
  CHECK(code_from_json(code_to_json(big)) == big);
  CHECK_THROWS_AS(code_from_json(json{{"length", 7}}), IoError);
  CHECK_THROWS_AS(code_from_json(json{{"length", 7}, {"codewords", {"zz"}}}), IoError);
  CHECK_THROWS_AS(code_from_json(json{{"length", 40}, {"codewords", json::array()}}), IoError);
  CHECK_THROWS_AS(code_from_json(json{{"length", 7}, {"codewords", {1, 2}}}), IoError);
}

TEST_CASE("atlas JSON") {
  const json j = atlas_to_json(fx::atlas8());
  CHECK(j["classes"].size() == 10);
  CHECK(j["classes"][0]["alias"].is_null());
  const auto back = atlas_from_json(j);
  REQUIRE(back.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(back[i].representative == fx::atlas8().classes[i].representative);
  CHECK_THROWS_AS(atlas_from_json(json{{"classes", {{{"id", 0}}}}}), IoError);
}

TEST_CASE("graph JSON round trip and exports") {
  const CodeAnalysis a = analyze_code(fx::kappa_code(8), false);
  const SqsGraph& g = a.graph;
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_from_json(json::parse(graph_to_json(g).dump())) == g);
  const std::string dot = graph_dot(g);
  std::size_t nodes = 0, loops = 0;
  for (int v = 0; v < 8; ++v) {
    const std::string id = "v" + std::to_string(v);
    nodes += dot.find("  " + id + " [label") != std::string::npos;
    loops += dot.find(id + " -- " + id + " [label=\"28\"]") != std::string::npos;
  }
  CHECK(nodes == 8);
  CHECK(loops == 8);
  CHECK(dot.find("3333333333333333") != std::string::npos);

  std::istringstream csv(graph_csv(g));
  std::string line;
  std::getline(csv, line);
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    int sum = 0;
    while (std::getline(ls, cell, ',')) sum += std::stoi(cell);
    CHECK(sum == 140);
    ++rows;
  }
  CHECK(rows == 8);

  json bad = graph_to_json(g);
  bad["edges"][0]["quadruples"][0] = "01x3";
  CHECK_THROWS_AS(graph_from_json(bad), IoError);
  bad = graph_to_json(g);
  bad["edges"][2]["multiplicity"] = 3;
  CHECK_THROWS_WITH_AS(graph_from_json(bad), doctest::Contains("graph edge"), IoError);
}

TEST_CASE("tuples parse back") {
  std::array<int, 16> t{};
  t.fill(16);
  t[3] = 13;
  t[4] = 7;
  CHECK(parse_tuple(render_tuple(t)) == t);
  CHECK_THROWS_AS(parse_tuple("123"), IoError);
  CHECK_THROWS_AS(parse_tuple("111111111111111e"), IoError);
}

TEST_CASE("atomic writes and malformed files") {
  const fs::path d = scratch_dir("atomic");
  write_json_atomic(d / "sub" / "a.json", json{{"x", 1}});
  CHECK(read_json_file(d / "sub" / "a.json")["x"] == 1);
  for (const auto& e : fs::directory_iterator(d / "sub")) CHECK(e.path().filename() == "a.json");
  {
    std::ofstream(d / "bad.json") << "{ \"length\": 7, ";
  }
  CHECK_THROWS_WITH_AS(read_json_file(d / "bad.json"), doctest::Contains("bad.json"), IoError);
  CHECK_THROWS_AS(read_json_file(d / "missing.json"), IoError);
  CHECK_THROWS_AS(write_text_atomic("", "x"), IoError);
}

TEST_CASE("alias files") {
  const fs::path d = scratch_dir("alias");
  write_json_atomic(d / "aliases.json", json{{"0", "a"}, {"3", "b"}});
  const auto m = load_alias_file(d / "aliases.json");
  CHECK(m.size() == 2);
  CHECK(m.at(3) == "b");
  write_json_atomic(d / "bad.json", json{{"x", "a"}});
  CHECK_THROWS_AS(load_alias_file(d / "bad.json"), IoError);
}

TEST_CASE("report JSON") {
  const StructureReport r = full_report(fx::kappa_code(9));
  const json j = report_to_json(r);
  CHECK(j["kappa"] == 9);
  CHECK(j["pass"] == true);
  CHECK(j["loops"].size() == 4);
  CHECK(j["links"].size() == r.links.size());
  CHECK(j["loops"][0]["multiplicity"] == 44);
  CHECK(j["indexTwo"]["mergeMatches"] == true);
  CHECK(j["links"][0]["products"].size() == 2);
}
