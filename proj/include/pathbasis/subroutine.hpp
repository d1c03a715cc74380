/*
  Recursive basis construction for skip-free fully connected networks.

  Per layer pair (k, k+1): a vertex-disjoint set of "direct" edges (identity
  matching; when layer k is wider, each leftover tail gets one chosen head),
  every remaining edge is a "cross" edge. Direct stubs concatenate with every
  path reaching their tail; cross stubs with exactly one chosen path p*. The
  basis is the final direct+cross set: |B| = m - H.

  Every "randomly" in the construction is resolved by a TieBreak: the default
  picks lowest indices / lexicographically least paths, a seeded mode draws
  from a PRNG, and explicit overrides pin individual choices.
*/
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pathbasis/path_algebra.hpp"

namespace pathbasis {

enum class TieBreakMode { Deterministic, Seeded, Explicit };

struct ExplicitOverrides {
  // (layer k, leftover tail index) -> head index at layer k+1 for the extra
  // direct edge.
  std::map<std::pair<int, int>, int> direct_extra;
  // (layer k, node index) -> node sequence of the constructed path chosen as
  // p* for the cross stubs leaving that node.
  std::map<std::pair<int, int>, std::vector<NodeRef>> pstar;
};

struct TieBreak {
  TieBreakMode mode = TieBreakMode::Deterministic;
  std::uint64_t seed = 0;
  ExplicitOverrides overrides;

  static TieBreak deterministic() { return {}; }
  static TieBreak seeded(std::uint64_t s) {
    return {TieBreakMode::Seeded, s, {}};
  }
  static TieBreak with_overrides(ExplicitOverrides o) {
    return {TieBreakMode::Explicit, 0, std::move(o)};
  }
};

enum class PathOrigin { Direct, Cross };

struct BasisPath {
  Path path;
  PathOrigin origin = PathOrigin::Direct;
  int substructure_id = 0;

  auto operator<=>(const BasisPath&) const = default;
};

struct BasisPathSet {
  std::vector<BasisPath> paths;

  std::size_t size() const { return paths.size(); }
};

// State after processing layer pair (k, k+1): all constructed paths end at
// layer k+1, grouped by their head node in `reach`.
struct LayerState {
  int k = 0;
  std::vector<Path> p_dir;
  std::vector<Path> p_cross;
  std::map<NodeRef, std::vector<Path>> reach;
};

// Single-edge direct stubs for layer pair (k, k+1): identity matching of the
// first min(|O^k|, |O^k+1|) indices, then one tb-chosen head per leftover
// tail when layer k is wider. Exactly one direct stub leaves every tail.
std::vector<Path> direct_paths(const NetworkGraph& g, int k, const TieBreak& tb);

// The edges of block (k, k+1) not used by `direct`, in canonical edge order.
std::vector<Path> cross_paths(const NetworkGraph& g, int k,
                              const std::vector<Path>& direct);

// Processes layer pair (k, k+1) for k >= 1: concatenates each direct stub
// with every path reaching its tail and each cross stub with the tb-chosen
// p*, then regroups by head node. Requires k == state.k + 1 and a non-empty
// reach set at every layer-k node (else EmptyReach).
LayerState extend_layer(const LayerState& state, const NetworkGraph& g, int k,
                        const TieBreak& tb);

// The k = 0 state: direct and cross stubs of block (0, 1) grouped by head.
LayerState initial_state(const NetworkGraph& g, const TieBreak& tb);

// Full construction. Throws HasSkipEdges on any layer-skip edge and
// MissingBlock if some consecutive block is absent.
BasisPathSet subroutine_basis(const NetworkGraph& g, const TieBreak& tb);

}  // namespace pathbasis
