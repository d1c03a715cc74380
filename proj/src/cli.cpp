#include "pathbasis/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "pathbasis/hbps.hpp"
#include "pathbasis/serial.hpp"
#include "pathbasis/verify.hpp"

namespace pathbasis {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NetworkGraph load_graph(const Command& cmd) {
  const json doc = parse_document(read_file(cmd.input_path), cmd.input_path);
  return build_network(spec_from_json(doc));
}

TieBreak make_tiebreak(const Command& cmd) {
  if (!cmd.override_path.empty()) {
    const json doc = parse_document(read_file(cmd.override_path), cmd.override_path);
    return TieBreak::with_overrides(overrides_from_json(doc));
  }
  if (cmd.seed) return TieBreak::seeded(*cmd.seed);
  return TieBreak::deterministic();
}

std::string block_list(const NetworkGraph& g) {
  std::string s;
  for (const LayerBlock& b : g.blocks()) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(b.from_layer) + "," + std::to_string(b.to_layer) + ")";
  }
  return s;
}

std::string layer_list(const std::vector<int>& layers) {
  std::string s = "[";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(layers[i]);
  }
  return s + "]";
}

std::string summary_build(const NetworkGraph& g) {
  std::ostringstream o;
  o << "layers: " << layer_list(g.layer_sizes()) << "\n"
    << "blocks: " << block_list(g) << "\n"
    << "last layer: " << g.last_layer() << "\n"
    << "edges (m): " << g.edge_count() << "\n"
    << "hidden nodes (H): " << g.hidden_node_count() << "\n"
    << "skip edges: " << (g.has_skip_edges() ? "yes" : "no") << "\n"
    << "input-output paths: " << g.path_count().str() << "\n";
  return o.str();
}

std::string summary_paths(const std::vector<Path>& paths) {
  std::ostringstream o;
  o << "paths: " << paths.size() << "\n";
  for (const Path& p : paths) o << to_string(p) << "\n";
  return o.str();
}

std::string summary_basis(const BasisPathSet& b) {
  std::ostringstream o;
  o << "cardinality: " << b.paths.size() << "\n";
  for (const BasisPath& bp : b.paths) {
    o << (bp.origin == PathOrigin::Direct ? "direct " : "cross  ")
      << to_string(bp.path) << "\n";
  }
  return o.str();
}

std::string layers_of(const SubstructurePath& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.layers.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.layers[i]);
  }
  return s + ")";
}

std::string summary_hbps(const HbpsResult& r) {
  std::ostringstream o;
  o << "substructure paths: " << r.substructures.all_paths.size()
    << ", independent: " << r.substructures.independent.size() << "\n";
  for (std::size_t i = 0; i < r.per_substructure.size(); ++i) {
    const PerSubstructure& ps = r.per_substructure[i];
    o << "  [" << i << "] path " << layers_of(ps.path) << ": m=" << ps.m
      << " H=" << ps.h << " |B|=" << ps.basis.paths.size() << "\n";
  }
  o << "cardinality: " << r.basis.paths.size() << "\n";
  return o.str();
}

std::string summary_report(const VerificationReport& rep) {
  std::ostringstream o;
  o << "coverage: " << (rep.coverage_ok ? "ok" : "FAILED") << "\n"
    << "cardinality: " << rep.actual_cardinality << " expected "
    << rep.expected_cardinality.str() << "\n"
    << "rank: " << rep.rank << " ("
    << (rep.independent_ok ? "independent" : "DEPENDENT") << ")\n"
    << "span: " << rep.span_mode << ", checked " << rep.span_checked
    << ", failures " << rep.span_failures.size() << "\n"
    << "timings: coverage " << rep.coverage_ms << "ms, rank " << rep.rank_ms
    << "ms, span " << rep.span_ms << "ms\n"
    << "result: " << (rep.all_ok() ? "PASS" : "FAIL") << "\n";
  return o.str();
}

std::string summary_witness(const std::optional<SpanWitness>& w) {
  if (!w) return "in span: no\n";
  std::ostringstream o;
  o << "in span: yes (" << (w->integral ? "all integer" : "non-integer")
    << " coefficients)\ncoefficients:";
  for (const linalg::Rational& q : w->coefficients) o << " " << q.str();
  o << "\n";
  return o.str();
}

// Either a basis to work with or an early exit code (hbps rejection already
// reported to err).
struct BasisOrExit {
  BasisPathSet basis;
  std::optional<int> exit;
};

BasisOrExit acquire_basis(const Command& cmd, const NetworkGraph& g,
                          const TieBreak& tb, std::ostream& err) {
  if (!cmd.basis_path.empty()) {
    const json doc = parse_document(read_file(cmd.basis_path), cmd.basis_path);
    return {basis_from_json(g, doc), std::nullopt};
  }
  if (!g.has_skip_edges()) {
    return {subroutine_basis(g, tb), std::nullopt};
  }
  auto result = hbps(g, tb, cmd.jobs);
  if (std::holds_alternative<RejectedSharedEdges>(result)) {
    err << kSharedEdgesMessage << "\n";
    return {{}, 2};
  }
  return {std::move(std::get<HbpsResult>(result).basis), std::nullopt};
}

void emit(const Command& cmd, std::ostream& out, const std::string& text) {
  if (cmd.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cmd.output_path, std::ios::binary);
  if (!f) throw Error("cannot write file: " + cmd.output_path);
  f << text;
}

int dispatch(const Command& cmd, std::ostream& out, std::ostream& err) {
  const bool summary = cmd.format == "summary";
  if (!summary && cmd.format != "structured") {
    throw Error("unknown format: " + cmd.format);
  }

  if (cmd.verb == "build") {
    const NetworkGraph g = load_graph(cmd);
    emit(cmd, out, summary ? summary_build(g) : dump_document(graph_stats_json(g)));
    return 0;
  }
  if (cmd.verb == "enumerate") {
    const NetworkGraph g = load_graph(cmd);
    const std::vector<Path> paths = enumerate_paths(g, cmd.max_paths);
    emit(cmd, out,
         summary ? summary_paths(paths) : dump_document(paths_document(g, paths)));
    return 0;
  }
  if (cmd.verb == "basis") {
    const NetworkGraph g = load_graph(cmd);
    const BasisPathSet b = subroutine_basis(g, make_tiebreak(cmd));
    emit(cmd, out, summary ? summary_basis(b) : dump_document(basis_to_json(b)));
    return 0;
  }
  if (cmd.verb == "hbps") {
    const NetworkGraph g = load_graph(cmd);
    auto result = hbps(g, make_tiebreak(cmd), cmd.jobs);
    if (std::holds_alternative<RejectedSharedEdges>(result)) {
      err << kSharedEdgesMessage << "\n";
      return 2;
    }
    const HbpsResult& r = std::get<HbpsResult>(result);
    emit(cmd, out, summary ? summary_hbps(r) : dump_document(hbps_to_json(r)));
    return 0;
  }
  if (cmd.verb == "verify") {
    const NetworkGraph g = load_graph(cmd);
    BasisOrExit b = acquire_basis(cmd, g, make_tiebreak(cmd), err);
    if (b.exit) return *b.exit;
    VerifyOptions opts;
    opts.full_span_cap = cmd.max_paths;
    opts.sample_size = cmd.sample_size;
    opts.sample_seed = cmd.seed.value_or(0);
    const VerificationReport rep = verify_basis(g, b.basis, opts);
    emit(cmd, out,
         summary ? summary_report(rep)
                 : dump_document(report_to_json(rep, cmd.timings)));
    return rep.all_ok() ? 0 : 3;
  }
  if (cmd.verb == "represent") {
    const NetworkGraph g = load_graph(cmd);
    if (cmd.path_file.empty()) throw Error("represent needs --path FILE");
    const json pdoc = parse_document(read_file(cmd.path_file), cmd.path_file);
    const Path p = path_from_json(g, pdoc.contains("path")
                                         ? pdoc["path"]
                                         : throw InvalidDocument(
                                               cmd.path_file + ": missing \"path\""));
    BasisOrExit b = acquire_basis(cmd, g, make_tiebreak(cmd), err);
    if (b.exit) return *b.exit;
    const auto w = in_span(g, b.basis, p);
    emit(cmd, out,
         summary ? summary_witness(w) : dump_document(span_witness_json(w)));
    return 0;
  }
  throw Error("unknown verb: " + cmd.verb);
}

}  // namespace

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cmd, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace pathbasis
