#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathbasis {

using BigCount = boost::multiprecision::cpp_int;

// Base for everything this library throws on contract violations or bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Network spec validation failed (block out of range, empty layer, duplicate
// block, fewer than two layers, unknown weight edge).
struct InvalidSpec : Error {
  using Error::Error;
};

// An input document could not be parsed or fails schema checks.
struct InvalidDocument : Error {
  using Error::Error;
};

// A path does not satisfy the path invariants on its host graph.
struct InvalidPath : Error {
  using Error::Error;
};

// Total input-to-output path count exceeds the enumeration cap. Carries the
// exact count so callers can report it.
struct PathCountExceedsLimit : Error {
  BigCount count;
  std::uint64_t limit;
  PathCountExceedsLimit(BigCount n, std::uint64_t cap)
      : Error("path count " + n.str() + " exceeds limit " + std::to_string(cap)),
        count(std::move(n)),
        limit(cap) {}
};

// Path removal requested from a multigraph that does not contain the path.
struct PathNotSubgraph : Error {
  using Error::Error;
};

// Subroutine input contains at least one layer-skip edge.
struct HasSkipEdges : Error {
  using Error::Error;
};

// A layer transition has no corresponding edge block in the host graph.
struct MissingBlock : Error {
  using Error::Error;
};

// No substructure path from layer 0 to layer L exists in the reduced graph.
struct Unreachable : Error {
  using Error::Error;
};

// A node has no incoming constructed path during layer extension; signals a
// malformed (not fully connected) input.
struct EmptyReach : Error {
  using Error::Error;
};

// Brute-force reachability was asked about an instance above its hard caps.
struct InstanceTooLarge : Error {
  using Error::Error;
};

// An explicit tie-break override names a node or path that does not exist.
struct InvalidOverride : Error {
  using Error::Error;
};

}  // namespace pathbasis
