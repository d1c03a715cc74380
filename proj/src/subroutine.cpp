#include "pathbasis/subroutine.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pathbasis {

namespace {

struct ChoiceCtx {
  const TieBreak& tb;
  std::mt19937_64* rng = nullptr;  // non-null iff seeded
};

// Head index for the extra direct edge at a leftover tail. Consumes one draw
// in seeded mode.
int choose_extra_head(const ChoiceCtx& ctx, const NetworkGraph& g, int k,
                      int tail_index) {
  const int heads = g.layer_size(k + 1);
  switch (ctx.tb.mode) {
    case TieBreakMode::Seeded:
      return 1 + static_cast<int>((*ctx.rng)() % static_cast<std::uint64_t>(heads));
    case TieBreakMode::Explicit: {
      auto it = ctx.tb.overrides.direct_extra.find({k, tail_index});
      if (it == ctx.tb.overrides.direct_extra.end()) return 1;
      if (it->second < 1 || it->second > heads) {
        throw InvalidOverride("extra-edge override at layer " + std::to_string(k) +
                              " tail " + std::to_string(tail_index) +
                              " names head index " + std::to_string(it->second) +
                              " outside layer " + std::to_string(k + 1));
      }
      return it->second;
    }
    case TieBreakMode::Deterministic:
      break;
  }
  return 1;
}

// The path all cross stubs at node (k, i) are appended to. Consumes one draw
// in seeded mode.
const Path& choose_pstar(const ChoiceCtx& ctx, int k, int i,
                         const std::vector<Path>& reach_list) {
  switch (ctx.tb.mode) {
    case TieBreakMode::Seeded:
      return reach_list[(*ctx.rng)() % reach_list.size()];
    case TieBreakMode::Explicit: {
      auto it = ctx.tb.overrides.pstar.find({k, i});
      if (it == ctx.tb.overrides.pstar.end()) break;
      for (const Path& p : reach_list) {
        if (p.nodes == it->second) return p;
      }
      throw InvalidOverride("p* override at node (" + std::to_string(k) + "," +
                            std::to_string(i) +
                            ") does not name a constructed path");
    }
    case TieBreakMode::Deterministic:
      break;
  }
  return *std::min_element(reach_list.begin(), reach_list.end());
}

std::vector<Path> direct_stubs(const NetworkGraph& g, int k, const ChoiceCtx& ctx) {
  const int nt = g.layer_size(k);
  const int nh = g.layer_size(k + 1);
  std::vector<Path> out;
  out.reserve(static_cast<std::size_t>(std::max(nt, nh)));
  // Identity matching is a vertex-disjoint set; in a complete bipartite block
  // any depth-first matching yields one, so the canonical choice is i <-> i.
  for (int i = 1; i <= std::min(nt, nh); ++i) {
    out.push_back(Path{{{k, i}, {k + 1, i}}});
  }
  for (int t = nh + 1; t <= nt; ++t) {
    out.push_back(Path{{{k, t}, {k + 1, choose_extra_head(ctx, g, k, t)}}});
  }
  return out;
}

std::vector<Path> cross_stubs(const NetworkGraph& g, int k,
                              const std::vector<Path>& direct) {
  std::set<EdgeRef> used;
  for (const Path& p : direct) used.insert({p.nodes[0], p.nodes[1]});
  std::vector<Path> out;
  for (int i = 1; i <= g.layer_size(k); ++i) {
    for (int j = 1; j <= g.layer_size(k + 1); ++j) {
      const EdgeRef e{{k, i}, {k + 1, j}};
      if (!used.contains(e)) out.push_back(Path{{e.tail, e.head}});
    }
  }
  return out;
}

std::map<NodeRef, std::vector<Path>> group_by_head(const std::vector<Path>& dir,
                                                   const std::vector<Path>& cross) {
  std::map<NodeRef, std::vector<Path>> reach;
  for (const Path& p : dir) reach[p.nodes.back()].push_back(p);
  for (const Path& p : cross) reach[p.nodes.back()].push_back(p);
  return reach;
}

LayerState initial_impl(const NetworkGraph& g, const ChoiceCtx& ctx) {
  std::vector<Path> dir = direct_stubs(g, 0, ctx);
  std::vector<Path> cross = cross_stubs(g, 0, dir);
  auto reach = group_by_head(dir, cross);
  return LayerState{0, std::move(dir), std::move(cross), std::move(reach)};
}

LayerState extend_impl(const LayerState& state, const NetworkGraph& g, int k,
                       const ChoiceCtx& ctx) {
  for (int i = 1; i <= g.layer_size(k); ++i) {
    auto it = state.reach.find({k, i});
    if (it == state.reach.end() || it->second.empty()) {
      throw EmptyReach("no constructed path reaches node " +
                       to_string(NodeRef{k, i}));
    }
  }

  const std::vector<Path> dir = direct_stubs(g, k, ctx);
  const std::vector<Path> cross = cross_stubs(g, k, dir);
  std::map<int, Path> direct_at;       // exactly one (k, k+1) stub per tail
  std::map<int, std::vector<Path>> cross_at;
  for (const Path& p : dir) direct_at.emplace(p.nodes[0].index, p);
  for (const Path& p : cross) cross_at[p.nodes[0].index].push_back(p);

  std::vector<Path> new_dir;
  std::vector<Path> new_cross;
  for (int i = 1; i <= g.layer_size(k); ++i) {
    const std::vector<Path>& reach_list = state.reach.at({k, i});
    const NodeRef dir_head = direct_at.at(i).nodes[1];
    for (const Path& p0 : reach_list) {
      Path p = p0;
      p.nodes.push_back(dir_head);
      new_dir.push_back(std::move(p));
    }
    auto ci = cross_at.find(i);
    if (ci == cross_at.end()) continue;
    const Path& pstar = choose_pstar(ctx, k, i, reach_list);
    for (const Path& q : ci->second) {
      Path p = pstar;
      p.nodes.push_back(q.nodes[1]);
      new_cross.push_back(std::move(p));
    }
  }

  auto reach = group_by_head(new_dir, new_cross);
  return LayerState{k, std::move(new_dir), std::move(new_cross), std::move(reach)};
}

void check_layer_range(const NetworkGraph& g, int k) {
  if (k < 0 || k >= g.last_layer()) {
    throw Error("layer pair index " + std::to_string(k) + " out of range 0.." +
                std::to_string(g.last_layer() - 1));
  }
}

void validate_overrides(const NetworkGraph& g, const TieBreak& tb) {
  if (tb.mode != TieBreakMode::Explicit) return;
  const int last = g.last_layer();
  for (const auto& [key, head] : tb.overrides.direct_extra) {
    const auto [k, tail] = key;
    if (k < 0 || k >= last || tail < 1 || tail > g.layer_size(k) || head < 1 ||
        head > g.layer_size(k + 1)) {
      throw InvalidOverride("extra-edge override (" + std::to_string(k) + "," +
                            std::to_string(tail) + ")->" + std::to_string(head) +
                            " names nodes outside the graph");
    }
  }
  for (const auto& [key, nodes] : tb.overrides.pstar) {
    const auto [k, i] = key;
    if (k < 1 || k >= last || i < 1 || i > g.layer_size(k)) {
      throw InvalidOverride("p* override at (" + std::to_string(k) + "," +
                            std::to_string(i) + ") names a node outside the graph");
    }
    if (nodes.empty() || nodes.back() != NodeRef{k, i} || nodes.front().layer != 0) {
      throw InvalidOverride("p* override at (" + std::to_string(k) + "," +
                            std::to_string(i) +
                            ") must run from layer 0 to that node");
    }
  }
}

}  // namespace

std::vector<Path> direct_paths(const NetworkGraph& g, int k, const TieBreak& tb) {
  check_layer_range(g, k);
  if (!g.has_block(k, k + 1)) {
    throw MissingBlock("no edge block between layers " + std::to_string(k) +
                       " and " + std::to_string(k + 1));
  }
  std::mt19937_64 rng(tb.seed);
  ChoiceCtx ctx{tb, tb.mode == TieBreakMode::Seeded ? &rng : nullptr};
  return direct_stubs(g, k, ctx);
}

std::vector<Path> cross_paths(const NetworkGraph& g, int k,
                              const std::vector<Path>& direct) {
  check_layer_range(g, k);
  return cross_stubs(g, k, direct);
}

LayerState initial_state(const NetworkGraph& g, const TieBreak& tb) {
  std::mt19937_64 rng(tb.seed);
  ChoiceCtx ctx{tb, tb.mode == TieBreakMode::Seeded ? &rng : nullptr};
  return initial_impl(g, ctx);
}

LayerState extend_layer(const LayerState& state, const NetworkGraph& g, int k,
                        const TieBreak& tb) {
  check_layer_range(g, k);
  if (k < 1 || k != state.k + 1) {
    throw Error("extend_layer expects k == state.k + 1 with k >= 1");
  }
  std::mt19937_64 rng(tb.seed);
  ChoiceCtx ctx{tb, tb.mode == TieBreakMode::Seeded ? &rng : nullptr};
  return extend_impl(state, g, k, ctx);
}

BasisPathSet subroutine_basis(const NetworkGraph& g, const TieBreak& tb) {
  if (g.has_skip_edges()) {
    throw HasSkipEdges("graph has layer-skip edges; decompose with hbps instead");
  }
  for (int k = 0; k < g.last_layer(); ++k) {
    if (!g.has_block(k, k + 1)) {
      throw MissingBlock("no edge block between layers " + std::to_string(k) +
                         " and " + std::to_string(k + 1));
    }
  }
  validate_overrides(g, tb);

  // One PRNG threaded through the whole construction; draws happen in
  // construction order (extras of each layer pair, then that layer's p*
  // choices in node order).
  std::mt19937_64 rng(tb.seed);
  ChoiceCtx ctx{tb, tb.mode == TieBreakMode::Seeded ? &rng : nullptr};

  LayerState state = initial_impl(g, ctx);
  for (int k = 1; k < g.last_layer(); ++k) {
    state = extend_impl(state, g, k, ctx);
  }

  BasisPathSet b;
  b.paths.reserve(state.p_dir.size() + state.p_cross.size());
  for (Path& p : state.p_dir) {
    b.paths.push_back({std::move(p), PathOrigin::Direct, 0});
  }
  for (Path& p : state.p_cross) {
    b.paths.push_back({std::move(p), PathOrigin::Cross, 0});
  }
  return b;
}

}  // namespace pathbasis
