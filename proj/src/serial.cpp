#include "pathbasis/serial.hpp"

#include <algorithm>
#include <set>

namespace pathbasis {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& why) {
  throw InvalidDocument(what + ": " + why);
}

int to_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what, "expected an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) bad(what, std::string("missing \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& j, std::set<std::string> allowed,
                         const std::string& what) {
  for (const auto& [k, v] : j.items()) {
    if (!allowed.contains(k)) bad(what, "unknown key \"" + k + "\"");
  }
}

json node_to_json(const NodeRef& v) { return json::array({v.layer, v.index}); }

NodeRef node_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) bad(what, "a node is [layer, index]");
  return NodeRef{to_int(j[0], what), to_int(j[1], what)};
}

json edge_to_json(const EdgeRef& e) {
  return json::array({node_to_json(e.tail), node_to_json(e.head)});
}

std::vector<NodeRef> nodes_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what, "a path is an array of [layer, index] nodes");
  std::vector<NodeRef> nodes;
  for (const json& n : j) nodes.push_back(node_from_json(n, what));
  return nodes;
}

std::string origin_name(PathOrigin o) {
  return o == PathOrigin::Direct ? "direct" : "cross";
}

PathOrigin origin_from(const json& j, const std::string& what) {
  if (j == "direct") return PathOrigin::Direct;
  if (j == "cross") return PathOrigin::Cross;
  bad(what, "origin must be \"direct\" or \"cross\"");
}

json basis_body(const BasisPathSet& b) {
  json paths = json::array();
  for (const BasisPath& bp : b.paths) {
    paths.push_back(json{{"nodes", path_to_json(bp.path)},
                         {"origin", origin_name(bp.origin)},
                         {"substructure", bp.substructure_id}});
  }
  return json{{"cardinality", b.paths.size()}, {"paths", std::move(paths)}};
}

json substructures_body(const SubstructureSet& s) {
  json transitions = json::array();
  for (const auto& [from, to] : s.reduced.transitions) {
    transitions.push_back(json::array({from, to}));
  }
  json paths = json::array();
  for (const SubstructurePath& p : s.all_paths) paths.push_back(p.layers);
  json vectors = json::array();
  for (const AlphaVector& a : s.vectors) vectors.push_back(a.bits);
  return json{{"last_layer", s.reduced.last_layer},
              {"transitions", std::move(transitions)},
              {"paths", std::move(paths)},
              {"alpha_vectors", std::move(vectors)},
              {"independent", s.independent}};
}

json with_version(json body) {
  json doc{{"format_version", kFormatVersion}};
  doc.update(body);
  return doc;
}

}  // namespace

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

json parse_document(const std::string& text, const std::string& what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(what, e.what());
  }
  if (!doc.is_object()) bad(what, "top level must be an object");
  const json& v = field(doc, "format_version", what);
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    bad(what, "format_version must be " + std::to_string(kFormatVersion));
  }
  return doc;
}

json spec_to_json(const NetworkSpec& spec) {
  json doc{{"format_version", kFormatVersion}, {"layers", spec.layer_sizes}};
  if (spec.blocks) {
    json blocks = json::array();
    for (const LayerBlock& b : *spec.blocks) {
      blocks.push_back(json{{"from", b.from_layer}, {"to", b.to_layer}});
    }
    doc["blocks"] = std::move(blocks);
  }
  if (!spec.weights.empty()) {
    json weights = json::array();
    for (const auto& [e, w] : spec.weights) {
      weights.push_back(json{{"tail", node_to_json(e.tail)},
                             {"head", node_to_json(e.head)},
                             {"value", w}});
    }
    doc["weights"] = std::move(weights);
  }
  return doc;
}

NetworkSpec spec_from_json(const json& doc) {
  const std::string what = "network spec";
  reject_unknown_keys(doc, {"format_version", "layers", "blocks", "weights"}, what);
  NetworkSpec spec;
  const json& layers = field(doc, "layers", what);
  if (!layers.is_array()) bad(what, "\"layers\" must be an array");
  for (const json& s : layers) spec.layer_sizes.push_back(to_int(s, what));

  if (auto it = doc.find("blocks"); it != doc.end()) {
    if (!it->is_array()) bad(what, "\"blocks\" must be an array");
    spec.blocks.emplace();
    for (const json& b : *it) {
      if (!b.is_object()) bad(what, "a block is {\"from\", \"to\"}");
      reject_unknown_keys(b, {"from", "to"}, what);
      spec.blocks->push_back(LayerBlock{to_int(field(b, "from", what), what),
                                        to_int(field(b, "to", what), what)});
    }
  }
  if (auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_array()) bad(what, "\"weights\" must be an array");
    for (const json& w : *it) {
      if (!w.is_object()) bad(what, "a weight is {\"tail\", \"head\", \"value\"}");
      reject_unknown_keys(w, {"tail", "head", "value"}, what);
      const json& value = field(w, "value", what);
      if (!value.is_number()) bad(what, "weight \"value\" must be a number");
      spec.weights[{node_from_json(field(w, "tail", what), what),
                    node_from_json(field(w, "head", what), what)}] =
          value.get<double>();
    }
  }
  return spec;
}

json graph_stats_json(const NetworkGraph& g) {
  json blocks = json::array();
  for (const LayerBlock& b : g.blocks()) {
    blocks.push_back(json{{"from", b.from_layer}, {"to", b.to_layer}});
  }
  return json{{"format_version", kFormatVersion},
              {"layers", g.layer_sizes()},
              {"blocks", std::move(blocks)},
              {"last_layer", g.last_layer()},
              {"edge_count", g.edge_count()},
              {"hidden_count", g.hidden_node_count()},
              {"has_skip_edges", g.has_skip_edges()},
              {"path_count", g.path_count().str()}};
}

json path_to_json(const Path& p) {
  json nodes = json::array();
  for (const NodeRef& v : p.nodes) nodes.push_back(node_to_json(v));
  return nodes;
}

Path path_from_json(const NetworkGraph& g, const json& doc) {
  return make_path(g, nodes_from_json(doc, "path"));
}

json combination_to_json(const PathCombination& c) {
  json terms = json::array();
  for (const PathTerm& t : c.terms) {
    terms.push_back(json{{"sign", t.sign}, {"path", path_to_json(t.path)}});
  }
  return terms;
}

PathCombination combination_from_json(const NetworkGraph& g, const json& doc) {
  const std::string what = "path combination";
  if (!doc.is_array()) bad(what, "expected an array of {\"sign\", \"path\"}");
  PathCombination c;
  for (const json& t : doc) {
    if (!t.is_object()) bad(what, "a term is {\"sign\", \"path\"}");
    reject_unknown_keys(t, {"sign", "path"}, what);
    const int sign = to_int(field(t, "sign", what), what);
    if (sign != 1 && sign != -1) bad(what, "sign must be 1 or -1");
    c.terms.push_back({sign, path_from_json(g, field(t, "path", what))});
  }
  return c;
}

json paths_document(const NetworkGraph& g, const std::vector<Path>& paths) {
  (void)g;
  json arr = json::array();
  for (const Path& p : paths) arr.push_back(path_to_json(p));
  return json{{"format_version", kFormatVersion},
              {"path_count", std::to_string(paths.size())},
              {"paths", std::move(arr)}};
}

json basis_to_json(const BasisPathSet& b) { return with_version(basis_body(b)); }

BasisPathSet basis_from_json(const NetworkGraph& g, const json& doc) {
  const std::string what = "basis document";
  reject_unknown_keys(doc, {"format_version", "cardinality", "paths"}, what);
  const json& paths = field(doc, "paths", what);
  if (!paths.is_array()) bad(what, "\"paths\" must be an array");
  BasisPathSet b;
  for (const json& e : paths) {
    if (!e.is_object()) bad(what, "a basis path is an object");
    reject_unknown_keys(e, {"nodes", "origin", "substructure"}, what);
    BasisPath bp;
    bp.path = path_from_json(g, field(e, "nodes", what));
    bp.origin = origin_from(field(e, "origin", what), what);
    bp.substructure_id = to_int(field(e, "substructure", what), what);
    if (bp.substructure_id < 0) bad(what, "substructure id must be >= 0");
    b.paths.push_back(std::move(bp));
  }
  const json& card = field(doc, "cardinality", what);
  if (!card.is_number_integer() ||
      card.get<std::int64_t>() != static_cast<std::int64_t>(b.paths.size())) {
    bad(what, "cardinality does not match the number of paths");
  }
  return b;
}

json substructures_to_json(const SubstructureSet& s) {
  return with_version(substructures_body(s));
}

json hbps_to_json(const HbpsResult& r) {
  json per = json::array();
  for (const PerSubstructure& ps : r.per_substructure) {
    per.push_back(json{{"path", ps.path.layers},
                       {"m", ps.m},
                       {"h", ps.h},
                       {"basis", basis_body(ps.basis)}});
  }
  return json{{"format_version", kFormatVersion},
              {"cardinality", r.basis.paths.size()},
              {"substructures", substructures_body(r.substructures)},
              {"per_substructure", std::move(per)},
              {"basis", basis_body(r.basis)}};
}

json report_to_json(const VerificationReport& rep, bool include_timings) {
  json uncovered = json::array();
  for (const EdgeRef& e : rep.uncovered_edges) uncovered.push_back(edge_to_json(e));
  json failures = json::array();
  for (const Path& p : rep.span_failures) failures.push_back(path_to_json(p));
  json doc{{"format_version", kFormatVersion},
           {"coverage_ok", rep.coverage_ok},
           {"uncovered_edges", std::move(uncovered)},
           {"expected_cardinality", rep.expected_cardinality.str()},
           {"actual_cardinality", rep.actual_cardinality},
           {"rank", rep.rank},
           {"independent_ok", rep.independent_ok},
           {"span_mode", rep.span_mode},
           {"span_checked", rep.span_checked},
           {"span_failures", std::move(failures)},
           {"all_ok", rep.all_ok()}};
  if (include_timings) {
    doc["timings_ms"] = json{{"coverage", rep.coverage_ms},
                             {"rank", rep.rank_ms},
                             {"span", rep.span_ms}};
  }
  return doc;
}

json span_witness_json(const std::optional<SpanWitness>& w) {
  if (!w) return json{{"format_version", kFormatVersion}, {"in_span", false}};
  json coeffs = json::array();
  for (const linalg::Rational& q : w->coefficients) coeffs.push_back(q.str());
  return json{{"format_version", kFormatVersion},
              {"in_span", true},
              {"integral", w->integral},
              {"coefficients", std::move(coeffs)}};
}

ExplicitOverrides overrides_from_json(const json& doc) {
  const std::string what = "override document";
  reject_unknown_keys(doc, {"format_version", "direct_extra", "pstar"}, what);
  ExplicitOverrides o;
  if (auto it = doc.find("direct_extra"); it != doc.end()) {
    if (!it->is_array()) bad(what, "\"direct_extra\" must be an array");
    for (const json& e : *it) {
      if (!e.is_object()) bad(what, "an extra is {\"layer\", \"tail\", \"head\"}");
      reject_unknown_keys(e, {"layer", "tail", "head"}, what);
      const int layer = to_int(field(e, "layer", what), what);
      const int tail = to_int(field(e, "tail", what), what);
      if (!o.direct_extra.emplace(std::pair{layer, tail},
                                  to_int(field(e, "head", what), what)).second) {
        bad(what, "duplicate extra-edge override for layer " +
                      std::to_string(layer) + " tail " + std::to_string(tail));
      }
    }
  }
  if (auto it = doc.find("pstar"); it != doc.end()) {
    if (!it->is_array()) bad(what, "\"pstar\" must be an array");
    for (const json& e : *it) {
      if (!e.is_object()) bad(what, "a p* entry is {\"layer\", \"node\", \"path\"}");
      reject_unknown_keys(e, {"layer", "node", "path"}, what);
      const int layer = to_int(field(e, "layer", what), what);
      const int node = to_int(field(e, "node", what), what);
      if (!o.pstar.emplace(std::pair{layer, node},
                           nodes_from_json(field(e, "path", what), what)).second) {
        bad(what, "duplicate p* override for node (" + std::to_string(layer) +
                      "," + std::to_string(node) + ")");
      }
    }
  }
  return o;
}

json overrides_to_json(const ExplicitOverrides& o) {
  json extras = json::array();
  for (const auto& [key, head] : o.direct_extra) {
    extras.push_back(
        json{{"layer", key.first}, {"tail", key.second}, {"head", head}});
  }
  json pstar = json::array();
  for (const auto& [key, nodes] : o.pstar) {
    json path = json::array();
    for (const NodeRef& v : nodes) path.push_back(node_to_json(v));
    pstar.push_back(json{
        {"layer", key.first}, {"node", key.second}, {"path", std::move(path)}});
  }
  return json{{"format_version", kFormatVersion},
              {"direct_extra", std::move(extras)},
              {"pstar", std::move(pstar)}};
}

}  // namespace pathbasis
