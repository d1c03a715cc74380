#include "pathbasis/substructure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pathbasis/linalg.hpp"

namespace pathbasis {

ReducedGraph reduced_graph(const NetworkGraph& g) {
  ReducedGraph rg;
  rg.last_layer = g.last_layer();
  for (const LayerBlock& b : g.blocks()) {
    rg.transitions.emplace_back(b.from_layer, b.to_layer);
  }
  std::sort(rg.transitions.begin(), rg.transitions.end());
  return rg;
}

std::vector<SubstructurePath> enumerate_substructure_paths(const ReducedGraph& rg) {
  std::map<int, std::vector<int>> succ;
  for (const auto& [from, to] : rg.transitions) succ[from].push_back(to);
  for (auto& [from, tos] : succ) std::sort(tos.begin(), tos.end());

  // Breadth-first over partial paths; expanding in ascending successor order
  // keeps the queue sorted by (length, lexicographic), so completed paths pop
  // shortest-first with lexicographic ties.
  std::vector<SubstructurePath> out;
  std::deque<std::vector<int>> queue{{0}};
  while (!queue.empty()) {
    std::vector<int> p = std::move(queue.front());
    queue.pop_front();
    if (p.back() == rg.last_layer) {
      out.push_back(SubstructurePath{std::move(p)});
      continue;
    }
    auto it = succ.find(p.back());
    if (it == succ.end()) continue;
    for (int to : it->second) {
      std::vector<int> q = p;
      q.push_back(to);
      queue.push_back(std::move(q));
    }
  }
  if (out.empty()) {
    throw Unreachable("no substructure path from layer 0 to layer " +
                      std::to_string(rg.last_layer));
  }
  return out;
}

AlphaVector vectorize(const SubstructurePath& p, int last_layer) {
  const int n = last_layer + 1;
  AlphaVector a;
  a.bits.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i + 1 < p.layers.size(); ++i) {
    a.bits[static_cast<std::size_t>(p.layers[i]) * n + p.layers[i + 1]] = 1;
  }
  return a;
}

std::vector<std::size_t> maximal_independent_subset(
    const std::vector<AlphaVector>& vectors) {
  linalg::RatMat rows;
  rows.reserve(vectors.size());
  for (const AlphaVector& a : vectors) {
    rows.emplace_back(a.bits.begin(), a.bits.end());
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return linalg::greedy_independent_rows(rows, cols);
}

std::optional<SharedEdges> check_pairwise_edge_disjoint(
    const std::vector<SubstructurePath>& paths) {
  std::vector<std::set<std::pair<int, int>>> edge_sets;
  edge_sets.reserve(paths.size());
  for (const SubstructurePath& p : paths) {
    std::set<std::pair<int, int>> es;
    for (std::size_t i = 0; i + 1 < p.layers.size(); ++i) {
      es.emplace(p.layers[i], p.layers[i + 1]);
    }
    edge_sets.push_back(std::move(es));
  }
  for (std::size_t r = 0; r < paths.size(); ++r) {
    for (std::size_t i = r + 1; i < paths.size(); ++i) {
      std::vector<std::pair<int, int>> shared;
      std::set_intersection(edge_sets[r].begin(), edge_sets[r].end(),
                            edge_sets[i].begin(), edge_sets[i].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) return SharedEdges{r, i, std::move(shared)};
    }
  }
  return std::nullopt;
}

SubstructureSet substructure_set(const NetworkGraph& g) {
  SubstructureSet s;
  s.reduced = reduced_graph(g);
  s.all_paths = enumerate_substructure_paths(s.reduced);
  s.vectors.reserve(s.all_paths.size());
  for (const SubstructurePath& p : s.all_paths) {
    s.vectors.push_back(vectorize(p, s.reduced.last_layer));
  }
  s.independent = maximal_independent_subset(s.vectors);
  return s;
}

InducedSubgraph induced_subgraph(const NetworkGraph& g, const SubstructurePath& p) {
  if (p.layers.size() < 2 || p.layers.front() != 0 ||
      p.layers.back() != g.last_layer()) {
    throw Error("substructure path must run from layer 0 to layer " +
                std::to_string(g.last_layer()));
  }
  NetworkSpec spec;
  for (std::size_t r = 0; r + 1 < p.layers.size(); ++r) {
    if (!g.has_block(p.layers[r], p.layers[r + 1])) {
      throw MissingBlock("substructure transition (" +
                         std::to_string(p.layers[r]) + "," +
                         std::to_string(p.layers[r + 1]) +
                         ") has no edge block in the host graph");
    }
  }
  for (int l : p.layers) spec.layer_sizes.push_back(g.layer_size(l));
  return InducedSubgraph{build_network(spec), p.layers};
}

}  // namespace pathbasis
