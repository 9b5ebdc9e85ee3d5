#include "pcl/io.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace pcl {

namespace {

std::string pair_str(const Pair& p) { return hex_of(p[0], 1) + hex_of(p[1], 1); }

json product_json(const std::pair<PairPartition, PairPartition>& p) {
  return json{{"left", p.first.str()}, {"right", p.second.str()}};
}

template <class T>
T get_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string(what) + ": field '" + key + "': " + e.what());
  }
}

}  // namespace

json code_to_json(const Code& c) {
  json words = json::array();
  for (std::uint16_t w : c.bits()) words.push_back(hex_of(w, c.length()));
  return json{{"length", c.length()}, {"codewords", std::move(words)}};
}

Code code_from_json(const json& j) {
  const int n = get_field<int>(j, "length", "code");
  if (n < 1 || n > kMaxLength) throw IoError("code: length " + std::to_string(n) + " outside [1,16]");
  const auto words = get_field<std::vector<std::string>>(j, "codewords", "code");
  std::vector<std::uint16_t> bits;
  bits.reserve(words.size());
  try {
    for (const auto& w : words) bits.push_back(parse_hex(w, n));
    return Code(n, std::move(bits));
  } catch (const std::exception& e) {
    throw IoError(std::string("code: ") + e.what());
  }
}

json codes_to_json(const std::vector<Code>& codes) {
  json out = json::array();
  for (const auto& c : codes) out.push_back(code_to_json(c));
  return out;
}

std::vector<Code> codes_from_json(const json& j) {
  if (!j.is_array()) throw IoError("expected a JSON array of codes");
  std::vector<Code> out;
  for (const auto& c : j) out.push_back(code_from_json(c));
  return out;
}

json atlas_to_json(const Classification& c) {
  json classes = json::array();
  for (const auto& k : c.classes) {
    json rep = json::array();
    for (const auto& part : k.representative) rep.push_back(code_to_json(part));
    classes.push_back(json{{"id", k.id},
                           {"alias", k.alias ? json(*k.alias) : json(nullptr)},
                           {"orbitSize", k.orbit_size},
                           {"members", k.members},
                           {"representative", std::move(rep)}});
  }
  return json{{"length", c.kind == PartitionKind::perfect7 ? 7 : 8}, {"classes", std::move(classes)}};
}

std::vector<AtlasEntry> atlas_from_json(const json& j) {
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array()) {
    throw IoError("atlas: expected an object with a 'classes' array");
  }
  std::vector<AtlasEntry> out;
  for (const auto& k : j["classes"]) {
    AtlasEntry e;
    e.id = get_field<int>(k, "id", "atlas class");
    if (k.contains("alias") && !k["alias"].is_null()) e.alias = get_field<std::string>(k, "alias", "atlas class");
    const auto& rep = k.contains("representative") ? k["representative"] : json();
    if (!rep.is_array() || rep.size() != 8) throw IoError("atlas class " + std::to_string(e.id) + ": representative must list 8 codes");
    for (std::size_t i = 0; i < 8; ++i) e.representative[i] = code_from_json(rep[i]);
    out.push_back(std::move(e));
  }
  return out;
}

json graph_to_json(const SqsGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices) {
    json o{{"id", v.id}, {"representative", hex_of(v.representative, 16)}};
    if (v.sts_tuple) o["stsTuple"] = render_tuple(*v.sts_tuple);
    vs.push_back(std::move(o));
  }
  json es = json::array();
  for (const auto& e : g.edges) {
    es.push_back(json{{"a", e.a}, {"b", e.b}, {"quadruples", e.quadruples.hex_list()}, {"multiplicity", e.multiplicity()}});
  }
  return json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

SqsGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw IoError("graph: expected 'vertices' and 'edges'");
  }
  SqsGraph g;
  for (const auto& v : j["vertices"]) {
    SqsVertex x;
    x.id = get_field<int>(v, "id", "graph vertex");
    if (x.id != static_cast<int>(g.vertices.size())) throw IoError("graph: vertex ids must be dense from 0");
    try {
      x.representative = parse_hex(get_field<std::string>(v, "representative", "graph vertex"), 16);
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& e) {
      throw IoError("graph vertex " + std::to_string(x.id) + ": " + e.what());
    }
    if (v.contains("stsTuple")) x.sts_tuple = parse_tuple(get_field<std::string>(v, "stsTuple", "graph vertex"));
    g.vertices.push_back(x);
  }
  const int n = static_cast<int>(g.vertices.size());
  for (const auto& e : j["edges"]) {
    SqsEdge x;
    x.a = get_field<int>(e, "a", "graph edge");
    x.b = get_field<int>(e, "b", "graph edge");
    const std::string where = "graph edge (" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
    if (x.a < 0 || x.b < x.a || x.b >= n) throw IoError(where + ": endpoints out of order or range");
    try {
      x.quadruples = QuadrupleSet::parse(get_field<std::vector<std::string>>(e, "quadruples", "graph edge"));
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& ex) {
      throw IoError(where + ": " + ex.what());
    }
    if (e.contains("multiplicity") && get_field<std::size_t>(e, "multiplicity", "graph edge") != x.multiplicity()) {
      throw IoError(where + ": multiplicity does not match the quadruple list");
    }
    if (!g.edges.empty() && std::pair(g.edges.back().a, g.edges.back().b) >= std::pair(x.a, x.b)) {
      throw IoError(where + ": edges must be sorted and unique");
    }
    g.edges.push_back(std::move(x));
  }
  return g;
}

std::string graph_dot(const SqsGraph& g) {
  std::ostringstream os;
  os << "graph sqs {\n";
  for (const auto& v : g.vertices) {
    os << "  v" << v.id << " [label=\"" << hex_of(v.representative, 16);
    if (v.sts_tuple) os << "\\n" << render_tuple(*v.sts_tuple);
    os << "\"];\n";
  }
  for (const auto& e : g.edges) os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.multiplicity() << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_csv(const SqsGraph& g) {
  const auto m = g.multiplicity_matrix();
  std::ostringstream os;
  os << "vertex";
  for (const auto& v : g.vertices) os << ",v" << v.id;
  os << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << "v" << i;
    for (std::size_t x : m[i]) os << "," << x;
    os << "\n";
  }
  return os.str();
}

std::array<int, 16> parse_tuple(const std::string& text) {
  if (text.size() != 16) throw IoError("type tuple '" + text + "' must have 16 letters");
  std::array<int, 16> out{};
  for (std::size_t i = 0; i < 16; ++i) {
    const char ch = text[i];
    if (ch >= '1' && ch <= '9') out[i] = ch - '0';
    else if (ch == 'c') out[i] = 13;
    else if (ch == 'd') out[i] = 14;
    else if (ch == 'g') out[i] = 16;
    else throw IoError("type tuple '" + text + "': unknown letter '" + std::string(1, ch) + "'");
  }
  return out;
}

json report_to_json(const StructureReport& r) {
  json loops = json::array();
  for (const auto& l : r.loops) {
    json o{{"vertex", l.vertex},
           {"multiplicity", l.multiplicity},
           {"expected", l.expected},
           {"verdict", verdict_name(l.verdict)},
           {"observed", l.observed.hex_list()}};
    if (l.product) o["product"] = product_json(*l.product);
    if (!l.note.empty()) o["note"] = l.note;
    loops.push_back(std::move(o));
  }
  json links = json::array();
  for (const auto& l : r.links) {
    json prods = json::array();
    for (const auto& p : l.products) prods.push_back(product_json(p));
    json quarters = json::array();
    for (const auto& q : l.quarters) quarters.push_back(json{{"left", pair_str(q.left)}, {"right", q.right.str()}});
    json o{{"a", l.a},
           {"b", l.b},
           {"multiplicity", l.multiplicity},
           {"verdict", verdict_name(l.verdict)},
           {"intra", l.intra},
           {"intraFamilies", l.intra_families},
           {"cross", l.cross},
           {"products", std::move(prods)},
           {"quarters", std::move(quarters)}};
    if (!l.note.empty()) o["note"] = l.note;
    links.push_back(std::move(o));
  }
  json out{{"kappa", r.kappa},
           {"vertices", r.vertices},
           {"pass", r.pass},
           {"overall", verdict_name(r.overall)},
           {"loopLevel", verdict_name(r.loop_level)},
           {"intraLevel", verdict_name(r.intra_level)},
           {"crossLevel", verdict_name(r.cross_level)},
           {"vertexSums140", r.vertex_sums},
           {"crossTotals", r.cross_totals},
           {"productsPerVertex", r.products_per_vertex},
           {"multiplicity", r.multiplicity},
           {"loops", std::move(loops)},
           {"links", std::move(links)}};
  if (r.relabeling) {
    std::string perm;
    for (int x : r.relabeling->perm) perm += hex_of(static_cast<std::uint16_t>(x), 1);
    out["relabeling"] = json{{"perm", perm}, {"swapped", r.relabeling->swapped}};
  }
  if (r.index_two) {
    out["indexTwo"] = json{{"found", r.index_two->found},
                           {"dimension", r.index_two->dimension},
                           {"loop", r.index_two->loop},
                           {"productEdge", r.index_two->product_edge},
                           {"mergeMatches", r.index_two->merge_matches}};
  }
  out["notes"] = r.notes;
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.empty()) throw IoError("empty output path");
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

void write_json_atomic(const std::filesystem::path& path, const json& j) { write_text_atomic(path, j.dump(2) + "\n"); }

std::map<int, std::string> load_alias_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_object()) throw IoError(path.string() + ": alias file must be a JSON object");
  std::map<int, std::string> out;
  for (const auto& [k, v] : j.items()) {
    int ord = 0;
    try {
      std::size_t pos = 0;
      ord = std::stoi(k, &pos);
      if (pos != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw IoError(path.string() + ": key '" + k + "' is not an ordinal");
    }
    if (!v.is_string()) throw IoError(path.string() + ": label for " + k + " must be a string");
    out[ord] = v.get<std::string>();
  }
  return out;
}

}  // namespace pcl
