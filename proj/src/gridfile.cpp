#include "gridstab/gridfile.hpp"

#include <algorithm>

#include <json.hpp>

#include "gridstab/textio.hpp"

namespace gridstab {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key, double fallback,
                    bool required, const std::string& where) {
  if (!obj.contains(key)) {
    if (required)
      fail(ErrorCode::ParseError, where + ": missing required key '" + key + "'");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number())
    fail(ErrorCode::ParseError, where + ": key '" + key + "' must be a number");
  return v.get<double>();
}

std::size_t index_field(const json& obj, const char* key,
                        const std::string& where) {
  if (!obj.contains(key))
    fail(ErrorCode::ParseError, where + ": missing required key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(ErrorCode::ParseError,
         where + ": key '" + key + "' must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

} // namespace

ParsedGrid parse_grid_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("grid file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") ||
      !doc.at("nodes").is_array() || !doc.at("edges").is_array())
    fail(ErrorCode::ParseError,
         "grid file: expected an object with 'nodes' and 'edges' arrays");

  struct RawNode {
    std::size_t id;
    NodeKind kind;
    Cx shunt;
  };
  std::vector<RawNode> raw;
  for (std::size_t i = 0; i < doc.at("nodes").size(); ++i) {
    const json& nd = doc.at("nodes")[i];
    const std::string where = "node " + std::to_string(i);
    if (!nd.is_object())
      fail(ErrorCode::ParseError, where + ": must be an object");
    RawNode rn;
    rn.id = index_field(nd, "id", where);
    if (!nd.contains("kind") || !nd.at("kind").is_string())
      fail(ErrorCode::ParseError, where + ": missing string key 'kind'");
    const std::string kind = nd.at("kind").get<std::string>();
    if (kind == "generator")
      rn.kind = NodeKind::Generator;
    else if (kind == "load")
      rn.kind = NodeKind::Load;
    else
      fail(ErrorCode::ParseError,
           where + ": kind must be 'generator' or 'load', got '" + kind + "'");
    rn.shunt = Cx{number_field(nd, "shunt_g", 0.0, false, where),
                  number_field(nd, "shunt_b", 0.0, false, where)};
    raw.push_back(rn);
  }
  if (raw.empty()) fail(ErrorCode::ParseError, "grid file: no nodes");

  const std::size_t n = raw.size();
  std::vector<bool> seen(n, false);
  for (const RawNode& rn : raw) {
    if (rn.id >= n)
      fail(ErrorCode::ParseError,
           "grid file: node id " + std::to_string(rn.id) +
               " out of range (ids must cover 0.." + std::to_string(n - 1) +
               ")");
    if (seen[rn.id])
      fail(ErrorCode::ParseError,
           "grid file: duplicate node id " + std::to_string(rn.id));
    seen[rn.id] = true;
  }

  // Renumber generators-first (stable within each kind by original id).
  std::vector<const RawNode*> ordered;
  ordered.reserve(n);
  for (const RawNode& rn : raw)
    if (rn.kind == NodeKind::Generator) ordered.push_back(&rn);
  const std::size_t n_gen = ordered.size();
  for (const RawNode& rn : raw)
    if (rn.kind == NodeKind::Load) ordered.push_back(&rn);
  std::stable_sort(ordered.begin(), ordered.begin() + n_gen,
                   [](const RawNode* a, const RawNode* b) { return a->id < b->id; });
  std::stable_sort(ordered.begin() + n_gen, ordered.end(),
                   [](const RawNode* a, const RawNode* b) { return a->id < b->id; });

  std::vector<std::size_t> remap(n); // old id -> new id
  std::vector<Node> nodes(n);
  bool renumbered = false;
  for (std::size_t new_id = 0; new_id < n; ++new_id) {
    const RawNode& rn = *ordered[new_id];
    remap[rn.id] = new_id;
    if (rn.id != new_id) renumbered = true;
    nodes[new_id] = Node{new_id, rn.kind, rn.shunt};
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc.at("edges").size(); ++i) {
    const json& ed = doc.at("edges")[i];
    const std::string where = "edge " + std::to_string(i);
    if (!ed.is_object())
      fail(ErrorCode::ParseError, where + ": must be an object");
    Edge e;
    const std::size_t a = index_field(ed, "a", where);
    const std::size_t b = index_field(ed, "b", where);
    if (a >= n || b >= n)
      fail(ErrorCode::ParseError, where + ": endpoint out of range");
    e.a = remap[a];
    e.b = remap[b];
    e.admittance = Cx{number_field(ed, "conductance", 0.0, false, where),
                      number_field(ed, "susceptance", 0.0, true, where)};
    edges.push_back(e);
  }

  try {
    ParsedGrid out{GridSpec(nodes, edges), {}};
    if (renumbered)
      out.warnings.push_back(
          "nodes renumbered so generators precede loads; edge endpoints "
          "remapped");
    return out;
  } catch (const Error& e) {
    // An invalid grid described by well-formed JSON is still a file problem.
    if (e.code() == ErrorCode::InvalidArgument)
      fail(ErrorCode::ParseError, std::string("grid file: ") + e.what());
    throw;
  }
}

ParsedGrid load_grid_file(const std::string& path) {
  return parse_grid_json(read_text_file(path));
}

std::string grid_to_json(const GridSpec& g) {
  JsonWriter w;
  w.begin_object();
  w.key("nodes");
  w.begin_array();
  for (const Node& nd : g.nodes()) {
    w.begin_object();
    w.kv("id", nd.id);
    w.kv("kind", nd.kind == NodeKind::Generator ? "generator" : "load");
    w.kv("shunt_b", nd.shunt.imag());
    w.kv("shunt_g", nd.shunt.real());
    w.end_object();
  }
  w.end_array();
  w.key("edges");
  w.begin_array();
  for (const Edge& e : g.edges()) {
    w.begin_object();
    w.kv("a", e.a);
    w.kv("b", e.b);
    w.kv("susceptance", e.admittance.imag());
    w.kv("conductance", e.admittance.real());
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += "\n";
  return out;
}

} // namespace gridstab
