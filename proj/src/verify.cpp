#include "pathbasis/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "pathbasis/path_algebra.hpp"
#include "pathbasis/substructure.hpp"

namespace pathbasis {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

linalg::RatVec indicator(const NetworkGraph& g, const Path& p) {
  linalg::RatVec v(g.edge_count(), 0);
  for (const EdgeRef& e : edge_list(p)) v[g.edge_index(e)] = 1;
  return v;
}

// Null-space basis of the span of b's indicators, scaled to integers:
// a path lies in span(b) iff it is orthogonal to every row returned.
std::vector<std::vector<BigCount>> integer_annihilators(const NetworkGraph& g,
                                                        const BasisPathSet& b) {
  linalg::RatMat rows;
  rows.reserve(b.paths.size());
  for (const BasisPath& bp : b.paths) rows.push_back(indicator(g, bp.path));
  linalg::RatMat ns = linalg::null_space(std::move(rows), g.edge_count());

  std::vector<std::vector<BigCount>> out;
  out.reserve(ns.size());
  for (const linalg::RatVec& y : ns) {
    BigCount scale = 1;
    for (const linalg::Rational& q : y) {
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
    }
    std::vector<BigCount> z;
    z.reserve(y.size());
    for (const linalg::Rational& q : y) {
      z.push_back(boost::multiprecision::numerator(q) *
                  (scale / boost::multiprecision::denominator(q)));
    }
    out.push_back(std::move(z));
  }
  return out;
}

bool orthogonal_to_all(const NetworkGraph& g,
                       const std::vector<std::vector<BigCount>>& ys,
                       const Path& p) {
  for (const auto& y : ys) {
    BigCount dot = 0;
    for (const EdgeRef& e : edge_list(p)) dot += y[g.edge_index(e)];
    if (dot != 0) return false;
  }
  return true;
}

// Uniform draw from [0, n) with rejection over n.bits()-bit words.
BigCount random_below(const BigCount& n, std::mt19937_64& rng) {
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  for (;;) {
    BigCount x = 0;
    for (unsigned got = 0; got < bits; got += 64) {
      x <<= 64;
      x |= BigCount(rng());
    }
    x >>= (((bits + 63) / 64) * 64 - bits);
    if (x < n) return x;
  }
}

// Paths from each node to the output layer; drives lexicographic unranking.
std::vector<BigCount> suffix_counts(const NetworkGraph& g) {
  // Node ids follow (layer, index) order, so a reverse sweep is topological.
  std::vector<NodeRef> nodes;
  for (int l = 0; l <= g.last_layer(); ++l) {
    for (int i = 1; i <= g.layer_size(l); ++i) nodes.push_back({l, i});
  }
  std::vector<BigCount> ways(nodes.size(), 0);
  std::map<NodeRef, std::size_t> id;
  for (std::size_t k = 0; k < nodes.size(); ++k) id[nodes[k]] = k;
  for (std::size_t k = nodes.size(); k-- > 0;) {
    if (nodes[k].layer == g.last_layer()) {
      ways[k] = 1;
      continue;
    }
    for (const EdgeRef& e : g.out_edges(nodes[k])) ways[k] += ways[id[e.head]];
  }
  return ways;
}

Path unrank_path(const NetworkGraph& g, const std::vector<BigCount>& ways,
                 const std::map<NodeRef, std::size_t>& id, BigCount idx) {
  std::vector<NodeRef> nodes;
  NodeRef cur{0, 0};
  for (int i = 1; i <= g.layer_size(0); ++i) {
    const BigCount& w = ways[id.at({0, i})];
    if (idx < w) {
      cur = {0, i};
      break;
    }
    idx -= w;
  }
  nodes.push_back(cur);
  while (cur.layer < g.last_layer()) {
    for (const EdgeRef& e : g.out_edges(cur)) {
      const BigCount& w = ways[id.at(e.head)];
      if (idx < w) {
        cur = e.head;
        break;
      }
      idx -= w;
    }
    nodes.push_back(cur);
  }
  return Path{std::move(nodes)};
}

}  // namespace

Coverage check_coverage(const BasisPathSet& b, const NetworkGraph& g) {
  std::set<EdgeRef> covered;
  for (const BasisPath& bp : b.paths) {
    for (const EdgeRef& e : edge_list(bp.path)) covered.insert(e);
  }
  Coverage c;
  for (const EdgeRef& e : g.edges()) {
    if (!covered.contains(e)) c.uncovered.push_back(e);
  }
  c.ok = c.uncovered.empty();
  return c;
}

std::size_t independence_rank(const NetworkGraph& g,
                              const std::vector<Path>& paths) {
  linalg::RowSpace space(g.edge_count());
  for (const Path& p : paths) space.insert(indicator(g, p));
  return space.rank();
}

std::optional<SpanWitness> in_span(const NetworkGraph& g, const BasisPathSet& b,
                                   const Path& p) {
  linalg::RatMat columns;
  columns.reserve(b.paths.size());
  for (const BasisPath& bp : b.paths) columns.push_back(indicator(g, bp.path));
  auto sol = linalg::solve_combination(columns, indicator(g, p));
  if (!sol) return std::nullopt;
  return SpanWitness{std::move(sol->coefficients), sol->integral};
}

bool brute_force_reachable(const NetworkGraph& g, const std::vector<Path>& s,
                           const Path& p, int depth) {
  if (g.path_count() > kBruteForceMaxPaths) {
    throw InstanceTooLarge("brute force needs a graph with at most " +
                           std::to_string(kBruteForceMaxPaths) + " paths, got " +
                           g.path_count().str());
  }
  if (depth < 0 || depth > kBruteForceMaxDepth) {
    throw InstanceTooLarge("brute force depth capped at " +
                           std::to_string(kBruteForceMaxDepth));
  }

  const EdgeVector target = path_edges(p);
  struct Item {
    std::vector<EdgeRef> edges;
    int sign;
  };
  std::vector<Item> items;
  for (const Path& q : s) {
    items.push_back({edge_list(q), +1});
    items.push_back({edge_list(q), -1});
  }

  EdgeVector acc;
  // Non-decreasing item index <=> multisets of signed terms, each at most
  // `depth` large; exhaustive by construction.
  auto dfs = [&](auto&& self, std::size_t start, int remaining) -> bool {
    if (acc == target) return true;
    if (remaining == 0) return false;
    for (std::size_t j = start; j < items.size(); ++j) {
      for (const EdgeRef& e : items[j].edges) acc.add(e, items[j].sign);
      if (self(self, j, remaining - 1)) return true;
      for (const EdgeRef& e : items[j].edges) acc.add(e, -items[j].sign);
    }
    return false;
  };
  return dfs(dfs, 0, depth);
}

VerificationReport verify_basis(const NetworkGraph& g, const BasisPathSet& b,
                                const VerifyOptions& opts) {
  VerificationReport rep;

  if (!g.has_skip_edges()) {
    rep.expected_cardinality =
        BigCount(g.edge_count()) - BigCount(g.hidden_node_count());
  } else {
    rep.expected_cardinality = 0;
    try {
      SubstructureSet ss = substructure_set(g);
      for (std::size_t idx : ss.independent) {
        InducedSubgraph sub = induced_subgraph(g, ss.all_paths[idx]);
        rep.expected_cardinality += BigCount(sub.graph.edge_count()) -
                                    BigCount(sub.graph.hidden_node_count());
      }
    } catch (const Unreachable&) {
      // No substructure path at all: the union over substructures is empty.
    }
  }
  rep.actual_cardinality = b.paths.size();

  auto t0 = Clock::now();
  Coverage cov = check_coverage(b, g);
  rep.coverage_ok = cov.ok;
  rep.uncovered_edges = std::move(cov.uncovered);
  rep.coverage_ms = ms_since(t0);

  t0 = Clock::now();
  std::vector<Path> bp;
  bp.reserve(b.paths.size());
  for (const BasisPath& x : b.paths) bp.push_back(x.path);
  rep.rank = independence_rank(g, bp);
  rep.independent_ok = rep.rank == rep.actual_cardinality;
  rep.rank_ms = ms_since(t0);

  t0 = Clock::now();
  const auto ys = integer_annihilators(g, b);
  if (g.edge_count() - ys.size() != rep.rank) {
    throw Error("internal: rank and null-space dimension disagree");
  }
  const BigCount total = g.path_count();
  if (total <= opts.full_span_cap) {
    rep.span_mode = "full";
    for (const Path& p : enumerate_paths(g, opts.full_span_cap)) {
      ++rep.span_checked;
      if (!orthogonal_to_all(g, ys, p)) rep.span_failures.push_back(p);
    }
  } else {
    rep.span_mode = "sampled";
    const std::vector<BigCount> ways = suffix_counts(g);
    std::map<NodeRef, std::size_t> id;
    std::size_t k = 0;
    for (int l = 0; l <= g.last_layer(); ++l) {
      for (int i = 1; i <= g.layer_size(l); ++i) id[{l, i}] = k++;
    }
    std::mt19937_64 rng(opts.sample_seed);
    for (std::uint64_t n = 0; n < opts.sample_size; ++n) {
      Path p = unrank_path(g, ways, id, random_below(total, rng));
      ++rep.span_checked;
      if (!orthogonal_to_all(g, ys, p)) rep.span_failures.push_back(p);
    }
  }
  rep.span_ms = ms_since(t0);
  return rep;
}

}  // namespace pathbasis
