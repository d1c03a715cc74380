/*
  Independent checks of everything the constructions claim.

  Coverage (every edge on >= 1 basis path), exact rational rank of the edge
  indicators, expected-cardinality accounting (m - H, or the sum over induced
  substructures), and span membership for every input-to-output path. Span
  checks use the annihilator of the basis row space: p is in span(B) iff it is
  orthogonal to a null-space basis of B's row space, which makes bulk checks
  cheap. in_span additionally extracts canonical rational coefficients, and a
  bounded brute-force search over signed path combinations probes the
  combinatorial definition directly on tiny instances.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathbasis/linalg.hpp"
#include "pathbasis/subroutine.hpp"

namespace pathbasis {

struct Coverage {
  bool ok = false;
  std::vector<EdgeRef> uncovered;  // canonical edge order
};

Coverage check_coverage(const BasisPathSet& b, const NetworkGraph& g);

// Exact rank of the paths' edge-indicator vectors over the rationals.
std::size_t independence_rank(const NetworkGraph& g, const std::vector<Path>& paths);

struct SpanWitness {
  std::vector<linalg::Rational> coefficients;  // one per basis path, in order
  bool integral = false;
};

// Canonical solve of indicator(p) = sum c_i * indicator(b_i): basis columns
// are eliminated left to right and free variables are zero. nullopt if p is
// outside the span.
std::optional<SpanWitness> in_span(const NetworkGraph& g, const BasisPathSet& b,
                                   const Path& p);

inline constexpr std::size_t kBruteForceMaxPaths = 12;
inline constexpr int kBruteForceMaxDepth = 6;

// True iff some signed multiset of at most `depth` terms from s evaluates
// exactly to indicator(p); exhaustive. Throws InstanceTooLarge beyond the
// caps above (total paths of g, requested depth).
bool brute_force_reachable(const NetworkGraph& g, const std::vector<Path>& s,
                           const Path& p, int depth);

struct VerifyOptions {
  // Span is checked over every enumerated path up to this count, after which
  // it downgrades to a seeded sample.
  std::uint64_t full_span_cap = 100000;
  std::uint64_t sample_size = 1000;
  std::uint64_t sample_seed = 0;
};

struct VerificationReport {
  bool coverage_ok = false;
  std::vector<EdgeRef> uncovered_edges;
  BigCount expected_cardinality;  // m - H, or sum of (m_r - H_r)
  std::size_t actual_cardinality = 0;
  std::size_t rank = 0;
  bool independent_ok = false;  // rank == actual_cardinality
  std::string span_mode;        // "full" or "sampled"
  std::uint64_t span_checked = 0;
  std::vector<Path> span_failures;
  double coverage_ms = 0.0;
  double rank_ms = 0.0;
  double span_ms = 0.0;

  bool all_ok() const {
    return coverage_ok && independent_ok &&
           BigCount(actual_cardinality) == expected_cardinality &&
           span_failures.empty();
  }
};

VerificationReport verify_basis(const NetworkGraph& g, const BasisPathSet& b,
                                const VerifyOptions& opts = {});

}  // namespace pathbasis
