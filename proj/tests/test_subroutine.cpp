#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "pathbasis/subroutine.hpp"

using namespace pathbasis;

namespace {

Path nodes(std::vector<NodeRef> ns) { return Path{std::move(ns)}; }

// Union of all edges used by the basis equals the edge set of the graph.
bool covers(const NetworkGraph& g, const BasisPathSet& b) {
  std::set<EdgeRef> seen;
  for (const BasisPath& bp : b.paths) {
    for (const EdgeRef& e : edge_list(bp.path)) seen.insert(e);
  }
  return std::vector<EdgeRef>(seen.begin(), seen.end()) == g.edges();
}

std::vector<Path> raw_paths(const BasisPathSet& b) {
  std::vector<Path> out;
  for (const BasisPath& bp : b.paths) out.push_back(bp.path);
  return out;
}

BigCount expected_size(const NetworkGraph& g) {
  return BigCount(g.edge_count()) - g.hidden_node_count();
}

}  // namespace

TEST_CASE("direct stubs: identity matching plus chosen extras") {
  NetworkGraph g = build_network({{3, 2, 3}, {}, {}});
  SUBCASE("wide-to-narrow pair gets an extra, lowest head by default") {
    auto dir = direct_paths(g, 0, TieBreak::deterministic());
    CHECK(dir == std::vector<Path>{nodes({{0, 1}, {1, 1}}), nodes({{0, 2}, {1, 2}}),
                                   nodes({{0, 3}, {1, 1}})});
    auto cross = cross_paths(g, 0, dir);
    CHECK(cross == std::vector<Path>{nodes({{0, 1}, {1, 2}}), nodes({{0, 2}, {1, 1}}),
                                     nodes({{0, 3}, {1, 2}})});
  }
  SUBCASE("override redirects the extra") {
    ExplicitOverrides o;
    o.direct_extra[{0, 3}] = 2;
    auto dir = direct_paths(g, 0, TieBreak::with_overrides(o));
    CHECK(dir.back() == nodes({{0, 3}, {1, 2}}));
  }
  SUBCASE("narrow-to-wide pair has no extras") {
    auto dir = direct_paths(g, 1, TieBreak::deterministic());
    CHECK(dir == std::vector<Path>{nodes({{1, 1}, {2, 1}}), nodes({{1, 2}, {2, 2}})});
    CHECK(cross_paths(g, 1, dir).size() == 4);
  }
  SUBCASE("stubs in a pair are vertex-disjoint") {
    for (int k : {0, 1}) {
      auto dir = direct_paths(g, k, TieBreak::seeded(99));
      std::set<NodeRef> tails;
      for (const Path& p : dir) CHECK(tails.insert(p.nodes[0]).second);
    }
  }
}

TEST_CASE("3-2-3 with pinned choices reproduces the published run") {
  NetworkGraph g = build_network({{3, 2, 3}, {}, {}});
  ExplicitOverrides o;
  o.direct_extra[{0, 3}] = 2;
  o.pstar[{1, 1}] = {{0, 2}, {1, 1}};
  o.pstar[{1, 2}] = {{0, 2}, {1, 2}};
  BasisPathSet b = subroutine_basis(g, TieBreak::with_overrides(o));

  const std::vector<BasisPath> want{
      {nodes({{0, 1}, {1, 1}, {2, 1}}), PathOrigin::Direct, 0},
      {nodes({{0, 2}, {1, 1}, {2, 1}}), PathOrigin::Direct, 0},
      {nodes({{0, 3}, {1, 1}, {2, 1}}), PathOrigin::Direct, 0},
      {nodes({{0, 2}, {1, 2}, {2, 2}}), PathOrigin::Direct, 0},
      {nodes({{0, 3}, {1, 2}, {2, 2}}), PathOrigin::Direct, 0},
      {nodes({{0, 1}, {1, 2}, {2, 2}}), PathOrigin::Direct, 0},
      {nodes({{0, 2}, {1, 1}, {2, 2}}), PathOrigin::Cross, 0},
      {nodes({{0, 2}, {1, 1}, {2, 3}}), PathOrigin::Cross, 0},
      {nodes({{0, 2}, {1, 2}, {2, 1}}), PathOrigin::Cross, 0},
      {nodes({{0, 2}, {1, 2}, {2, 3}}), PathOrigin::Cross, 0},
  };
  CHECK(b.paths == want);

  // Terminal groups 4 / 4 / 2, and |B| = m - H = 12 - 2.
  CHECK(b.size() == 10);
  std::map<NodeRef, int> ends;
  for (const BasisPath& bp : b.paths) ++ends[bp.path.nodes.back()];
  CHECK(ends[{2, 1}] == 4);
  CHECK(ends[{2, 2}] == 4);
  CHECK(ends[{2, 3}] == 2);
}

TEST_CASE("3-2-3 deterministic run") {
  NetworkGraph g = build_network({{3, 2, 3}, {}, {}});
  BasisPathSet b = subroutine_basis(g, TieBreak::deterministic());

  const std::vector<BasisPath> want{
      {nodes({{0, 1}, {1, 1}, {2, 1}}), PathOrigin::Direct, 0},
      {nodes({{0, 3}, {1, 1}, {2, 1}}), PathOrigin::Direct, 0},
      {nodes({{0, 2}, {1, 1}, {2, 1}}), PathOrigin::Direct, 0},
      {nodes({{0, 2}, {1, 2}, {2, 2}}), PathOrigin::Direct, 0},
      {nodes({{0, 1}, {1, 2}, {2, 2}}), PathOrigin::Direct, 0},
      {nodes({{0, 3}, {1, 2}, {2, 2}}), PathOrigin::Direct, 0},
      {nodes({{0, 1}, {1, 1}, {2, 2}}), PathOrigin::Cross, 0},
      {nodes({{0, 1}, {1, 1}, {2, 3}}), PathOrigin::Cross, 0},
      {nodes({{0, 1}, {1, 2}, {2, 1}}), PathOrigin::Cross, 0},
      {nodes({{0, 1}, {1, 2}, {2, 3}}), PathOrigin::Cross, 0},
  };
  CHECK(b.paths == want);

  std::map<NodeRef, int> ends;
  for (const BasisPath& bp : b.paths) ++ends[bp.path.nodes.back()];
  CHECK(ends[{2, 1}] == 4);
  CHECK(ends[{2, 2}] == 4);
  CHECK(ends[{2, 3}] == 2);
}

TEST_CASE("layer-by-layer state keeps |B(k)| = m(k) - H(k)") {
  const std::vector<std::vector<int>> shapes{
      {3, 2, 3}, {2, 3, 2, 4}, {1, 4, 1, 4, 1}, {4, 4, 4}};
  for (const std::vector<int>& sizes : shapes) {
    NetworkGraph g = build_network({sizes, {}, {}});
    TieBreak tb = TieBreak::deterministic();
    LayerState state = initial_state(g, tb);
    for (int k = 0;; ++k) {
      long long m = 0, h = 0;
      for (int j = 0; j <= k; ++j) m += sizes[j] * sizes[j + 1];
      for (int j = 1; j <= k; ++j) h += sizes[j];
      CHECK(static_cast<long long>(state.p_dir.size() + state.p_cross.size()) ==
            m - h);
      // reach partitions the state by terminal node
      std::size_t grouped = 0;
      for (const auto& [node, list] : state.reach) grouped += list.size();
      CHECK(grouped == state.p_dir.size() + state.p_cross.size());
      if (k + 1 >= g.last_layer()) break;
      state = extend_layer(state, g, k + 1, tb);
    }
    // the final state is exactly what subroutine_basis returns
    BasisPathSet b = subroutine_basis(g, tb);
    std::vector<Path> flat = state.p_dir;
    flat.insert(flat.end(), state.p_cross.begin(), state.p_cross.end());
    CHECK(raw_paths(b) == flat);
  }
}

TEST_CASE("two-layer graphs yield every edge as a path") {
  NetworkGraph g = build_network({{4, 3}, {}, {}});
  BasisPathSet b = subroutine_basis(g, TieBreak::deterministic());
  CHECK(b.size() == 12);
  std::set<EdgeRef> got;
  for (const BasisPath& bp : b.paths) {
    REQUIRE(bp.path.nodes.size() == 2);
    got.insert({bp.path.nodes[0], bp.path.nodes[1]});
  }
  CHECK(std::vector<EdgeRef>(got.begin(), got.end()) == g.edges());
  int direct = 0;
  for (const BasisPath& bp : b.paths) direct += bp.origin == PathOrigin::Direct;
  CHECK(direct == 4);  // 3 matched + 1 extra
}

TEST_CASE("basis properties hold across modes and shapes") {
  std::vector<std::vector<int>> shapes{
      {2, 2, 2}, {3, 2, 3}, {2, 3, 2}, {1, 5, 1}, {4, 1, 4}, {2, 3, 4, 3, 2},
      {5, 2},    {2, 5},    {3, 3, 3, 3}};
  std::vector<TieBreak> modes{TieBreak::deterministic(), TieBreak::seeded(0),
                              TieBreak::seeded(1), TieBreak::seeded(20240817)};
  for (const auto& sizes : shapes) {
    NetworkGraph g = build_network({sizes, {}, {}});
    for (const TieBreak& tb : modes) {
      BasisPathSet b = subroutine_basis(g, tb);
      CAPTURE(sizes[0]);
      CHECK(BigCount(b.size()) == expected_size(g));
      CHECK(covers(g, b));
      // exact-arithmetic independence via a second elimination routine
      CHECK(oracles::rank_of_paths(g, raw_paths(b)) == b.size());
      for (const BasisPath& bp : b.paths) {
        CHECK_NOTHROW(make_path(g, bp.path.nodes));
      }
    }
  }
}

TEST_CASE("seeded runs are reproducible") {
  NetworkGraph g = build_network({{4, 2, 3, 2}, {}, {}});
  for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
    BasisPathSet a = subroutine_basis(g, TieBreak::seeded(seed));
    BasisPathSet b = subroutine_basis(g, TieBreak::seeded(seed));
    CHECK(a.paths == b.paths);
  }
}

TEST_CASE("unconsulted well-formed overrides change nothing") {
  NetworkGraph g = build_network({{2, 3, 2}, {}, {}});
  ExplicitOverrides o;
  o.direct_extra[{0, 1}] = 2;  // tail 1 is identity-matched, never a leftover
  BasisPathSet with = subroutine_basis(g, TieBreak::with_overrides(o));
  BasisPathSet det = subroutine_basis(g, TieBreak::deterministic());
  CHECK(with.paths == det.paths);
}

TEST_CASE("input guards") {
  SUBCASE("skip edges are refused") {
    NetworkGraph g = build_network(
        {{2, 2, 2}, std::vector<LayerBlock>{{0, 1}, {1, 2}, {0, 2}}, {}});
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::deterministic()), HasSkipEdges);
  }
  SUBCASE("a missing consecutive block is refused") {
    NetworkGraph g =
        build_network({{2, 2, 2}, std::vector<LayerBlock>{{0, 1}}, {}});
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::deterministic()), MissingBlock);
    CHECK_THROWS_AS(direct_paths(g, 1, TieBreak::deterministic()), MissingBlock);
  }
  SUBCASE("extend_layer demands the successor pair") {
    NetworkGraph g = build_network({{2, 2, 2, 2}, {}, {}});
    LayerState s0 = initial_state(g, TieBreak::deterministic());
    CHECK_THROWS_AS(extend_layer(s0, g, 2, TieBreak::deterministic()), Error);
  }
  SUBCASE("a node no constructed path reaches") {
    NetworkGraph g = build_network({{3, 2, 3}, {}, {}});
    LayerState broken = initial_state(g, TieBreak::deterministic());
    broken.reach.erase({1, 2});
    CHECK_THROWS_AS(extend_layer(broken, g, 1, TieBreak::deterministic()),
                    EmptyReach);
  }
}

TEST_CASE("override validation") {
  NetworkGraph g = build_network({{3, 2, 3}, {}, {}});
  SUBCASE("extra head outside the next layer") {
    ExplicitOverrides o;
    o.direct_extra[{0, 3}] = 5;
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::with_overrides(o)),
                    InvalidOverride);
  }
  SUBCASE("extra tail outside the layer") {
    ExplicitOverrides o;
    o.direct_extra[{0, 9}] = 1;
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::with_overrides(o)),
                    InvalidOverride);
  }
  SUBCASE("p* pinned at the input layer") {
    ExplicitOverrides o;
    o.pstar[{0, 1}] = {{0, 1}};
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::with_overrides(o)),
                    InvalidOverride);
  }
  SUBCASE("p* sequence must end at its node") {
    ExplicitOverrides o;
    o.pstar[{1, 1}] = {{0, 2}, {1, 2}};
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::with_overrides(o)),
                    InvalidOverride);
  }
  SUBCASE("p* sequence must start at layer 0") {
    ExplicitOverrides o;
    o.pstar[{1, 1}] = {{1, 1}};
    CHECK_THROWS_AS(subroutine_basis(g, TieBreak::with_overrides(o)),
                    InvalidOverride);
  }
  SUBCASE("p* must name a path the construction actually built") {
    NetworkGraph deep = build_network({{2, 2, 2, 2}, {}, {}});
    ExplicitOverrides o;
    o.pstar[{2, 1}] = {{0, 2}, {1, 2}, {2, 1}};  // a real path, but not constructed
    CHECK_THROWS_AS(subroutine_basis(deep, TieBreak::with_overrides(o)),
                    InvalidOverride);
  }
}
