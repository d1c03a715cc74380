/*
  Document formats. All top-level documents carry "format_version": 1 and are
  emitted through ordered JSON with two-space indent plus a trailing newline,
  so identical inputs always produce identical bytes.

  Conventions: a node is [layer, index]; a path is an array of nodes; counts
  that may exceed 64 bits (path counts, expected cardinalities) are decimal
  strings; rational coefficients are canonical strings like "3/2" or "-1";
  origins are "direct" / "cross".
*/
#pragma once

#include <json.hpp>

#include "pathbasis/hbps.hpp"
#include "pathbasis/verify.hpp"

namespace pathbasis {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// dump(2) + newline; the one canonical byte rendering of every document.
std::string dump_document(const json& doc);

// ---- network specs ----
json spec_to_json(const NetworkSpec& spec);
NetworkSpec spec_from_json(const json& doc);

// Stats document for the `build` verb.
json graph_stats_json(const NetworkGraph& g);

// ---- paths and combinations ----
json path_to_json(const Path& p);
// Validates against g (throws InvalidPath via make_path).
Path path_from_json(const NetworkGraph& g, const json& doc);
json combination_to_json(const PathCombination& c);
PathCombination combination_from_json(const NetworkGraph& g, const json& doc);

// Document for the `enumerate` verb.
json paths_document(const NetworkGraph& g, const std::vector<Path>& paths);

// ---- basis sets ----
json basis_to_json(const BasisPathSet& b);
BasisPathSet basis_from_json(const NetworkGraph& g, const json& doc);

// ---- substructures / hbps ----
json substructures_to_json(const SubstructureSet& s);
json hbps_to_json(const HbpsResult& r);

// ---- verification ----
// Timings are opt-in: they vary run to run and would break byte-identical
// output.
json report_to_json(const VerificationReport& rep, bool include_timings);

// ---- represent ----
json span_witness_json(const std::optional<SpanWitness>& w);

// ---- tie-break override files ----
ExplicitOverrides overrides_from_json(const json& doc);
json overrides_to_json(const ExplicitOverrides& o);

// Parses text as JSON; wraps parse failures in InvalidDocument. Checks the
// top-level format_version.
json parse_document(const std::string& text, const std::string& what);

}  // namespace pathbasis
