#pragma once

// JSON, DOT and CSV persistence. Files are written to a temporary sibling and
// renamed into place, so a failed command never leaves a partial file.

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcl/partition_atlas.hpp"
#include "pcl/sqs_fold.hpp"
#include "pcl/sts.hpp"
#include "pcl/theorem5.hpp"

namespace pcl {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// { "length": n, "codewords": ["00", ...] }
json code_to_json(const Code& c);
Code code_from_json(const json& j);

json codes_to_json(const std::vector<Code>& codes);
std::vector<Code> codes_from_json(const json& j);

// { "kind": ..., "classes": [ { "id", "alias", "orbitSize", "representative": [Code x 8] } ] }
json atlas_to_json(const Classification& c);

struct AtlasEntry {
  int id = 0;
  std::optional<std::string> alias;
  std::array<Code, 8> representative;
};

std::vector<AtlasEntry> atlas_from_json(const json& j);

// Vertices with hex representatives and optional type strings; edges with
// hex quadruples and multiplicity.
json graph_to_json(const SqsGraph& g);
SqsGraph graph_from_json(const json& j);

std::string graph_dot(const SqsGraph& g);
std::string graph_csv(const SqsGraph& g);

json report_to_json(const StructureReport& r);

// Inverse of render_tuple.
std::array<int, 16> parse_tuple(const std::string& text);

json read_json_file(const std::filesystem::path& path);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const json& j);

// JSON object mapping ordinals to labels: { "0": "a", "3": "b" }.
std::map<int, std::string> load_alias_file(const std::filesystem::path& path);

}  // namespace pcl
