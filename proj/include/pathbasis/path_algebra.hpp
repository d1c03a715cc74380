/*
  Paths and signed path combinations over a network graph.

  A path runs from layer 0 to the last layer with strictly increasing node
  layers. Combinations of paths are represented by their signed edge vectors:
  a map edge -> integer multiplicity with zero entries absent. Parallel edges
  of an intermediate multigraph are entries >= 2; path removal demands the
  path's edges all be present (multiplicity >= 1) and decrements them.
*/
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pathbasis/netgraph.hpp"

namespace pathbasis {

struct Path {
  std::vector<NodeRef> nodes;
  auto operator<=>(const Path&) const = default;
};

// Validates nodes against g (length >= 2, strictly increasing layers, starts
// at layer 0, ends at last layer, every hop an edge of g). Throws InvalidPath.
Path make_path(const NetworkGraph& g, std::vector<NodeRef> nodes);

// The consecutive (tail, head) pairs of p, in path order.
std::vector<EdgeRef> edge_list(const Path& p);

// Signed edge multiplicities; zero entries are never stored.
struct EdgeVector {
  std::map<EdgeRef, int> coefficients;

  void add(const EdgeRef& e, int delta);
  bool is_zero() const { return coefficients.empty(); }
  bool operator==(const EdgeVector&) const = default;
};

struct PathTerm {
  int sign = 1;  // +1 or -1
  Path path;
};

struct PathCombination {
  std::vector<PathTerm> terms;
};

// 0/1 indicator of p's edges.
EdgeVector path_edges(const Path& p);

// Signed sum of edge indicators over the terms.
EdgeVector evaluate(const PathCombination& c);

// Decrement h on every edge of p. Throws PathNotSubgraph if any edge of p has
// multiplicity < 1 in h.
EdgeVector graph_remove_path(const EdgeVector& h, const Path& p);

enum class NotAPathReason {
  Empty,                 // zero vector
  NonBinaryCoefficient,  // some multiplicity not equal to 1
  Disconnected,          // edges do not chain into a single path
  WrongEndpoints,        // chain does not run layer 0 -> last layer
};

struct NotAPath {
  NotAPathReason reason = NotAPathReason::Empty;
  std::string detail;
};

// Recover the unique path whose indicator is v, if there is one.
std::variant<Path, NotAPath> as_path(const NetworkGraph& g, const EdgeVector& v);

inline constexpr std::uint64_t kDefaultPathLimit = 1'000'000;

// All input-to-output paths of g in lexicographic node order. Counts first;
// throws PathCountExceedsLimit (carrying the count) when over the cap.
std::vector<Path> enumerate_paths(const NetworkGraph& g,
                                  std::uint64_t limit = kDefaultPathLimit);

std::string to_string(const Path& p);

}  // namespace pathbasis
