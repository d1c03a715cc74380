/*
  Upper level of the hierarchical decomposition.

  Collapse the network to one node per layer: each edge block becomes a single
  transition. Every 0 -> L path of that reduced graph is a substructure path;
  its (L+1)x(L+1) layer-adjacency matrix, reshaped row-major, is its alpha
  vector. A greedy exact-rational pass keeps a maximal linearly independent
  subset, which must additionally be pairwise edge-disjoint for the lower
  level to apply. Each kept path induces a skip-free subgraph of the host.
*/
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pathbasis/netgraph.hpp"

namespace pathbasis {

struct ReducedGraph {
  int last_layer = 0;
  // (from_layer, to_layer) per block of the host graph, sorted.
  std::vector<std::pair<int, int>> transitions;
};

struct SubstructurePath {
  std::vector<int> layers;  // strictly increasing, 0 .. last_layer
  auto operator<=>(const SubstructurePath&) const = default;
};

struct AlphaVector {
  // Length (last_layer+1)^2; bit j*(L+1)+l is the (j,l) entry of the
  // layer-adjacency matrix, so support is strictly upper-triangular.
  std::vector<int> bits;
  bool operator==(const AlphaVector&) const = default;
};

struct SubstructureSet {
  ReducedGraph reduced;
  std::vector<SubstructurePath> all_paths;  // BFS order
  std::vector<AlphaVector> vectors;         // parallel to all_paths
  std::vector<std::size_t> independent;     // indices into all_paths
};

// First pair of paths (by scan order) that share a layer transition.
struct SharedEdges {
  std::size_t first = 0;   // indices into the checked list
  std::size_t second = 0;
  std::vector<std::pair<int, int>> transitions;
};

ReducedGraph reduced_graph(const NetworkGraph& g);

// All 0 -> L paths of rg, shortest first, ties in lexicographic layer order.
// Throws Unreachable if none exists.
std::vector<SubstructurePath> enumerate_substructure_paths(const ReducedGraph& rg);

AlphaVector vectorize(const SubstructurePath& p, int last_layer);

// Greedy in input order over exact rationals: index kept iff independent of
// the kept set so far; every excluded vector lies in the kept span.
std::vector<std::size_t> maximal_independent_subset(
    const std::vector<AlphaVector>& vectors);

std::optional<SharedEdges> check_pairwise_edge_disjoint(
    const std::vector<SubstructurePath>& paths);

// reduced graph + BFS paths + alpha vectors + maximal independent subset.
SubstructureSet substructure_set(const NetworkGraph& g);

// Skip-free relabeled subgraph along p: its layer r is host layer
// p.layers[r] with the full node set, blocks are the transitions of p.
struct InducedSubgraph {
  NetworkGraph graph;
  std::vector<int> host_layer;  // induced layer r -> host layer
};

InducedSubgraph induced_subgraph(const NetworkGraph& g, const SubstructurePath& p);

}  // namespace pathbasis
