/*
  Hierarchical basis construction for networks with layer-skip blocks.

  Upper level: decompose into a maximal independent set of substructure paths
  and require them pairwise edge-disjoint (otherwise the run is rejected with
  a structured value; the CLI turns that into exit code 2). Lower level: run
  the skip-free construction on each induced subgraph, map paths back to host
  coordinates, and merge with a canonical sort. |B| = sum of (m_r - H_r).
*/
#pragma once

#include <variant>
#include <vector>

#include "pathbasis/substructure.hpp"
#include "pathbasis/subroutine.hpp"

namespace pathbasis {

struct PerSubstructure {
  SubstructurePath path;
  std::size_t m = 0;  // edges of the induced subgraph
  std::size_t h = 0;  // hidden nodes of the induced subgraph
  BasisPathSet basis;  // host coordinates
};

struct HbpsResult {
  BasisPathSet basis;  // union over substructures, canonically sorted
  SubstructureSet substructures;
  std::vector<PerSubstructure> per_substructure;
};

struct RejectedSharedEdges {
  // Positions within the independent substructure-path list, plus the paths
  // themselves and their shared layer transitions.
  SharedEdges shared;
  SubstructurePath first_path;
  SubstructurePath second_path;
};

// jobs > 1 fans substructures out to that many concurrent workers; the result
// is byte-identical regardless. Seeded tie-breaks derive one sub-seed per
// substructure, so results do not depend on scheduling either. Explicit
// overrides are only accepted when exactly one substructure is selected (the
// override keys are induced-subgraph coordinates and would be ambiguous
// across several).
std::variant<HbpsResult, RejectedSharedEdges> hbps(const NetworkGraph& g,
                                                   const TieBreak& tb,
                                                   int jobs = 1);

// Rejection diagnostic; the CLI prints exactly this line on exit code 2.
inline constexpr const char* kSharedEdgesMessage =
    "There exist shared edges between two independent substructure paths";

}  // namespace pathbasis
