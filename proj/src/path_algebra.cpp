#include "pathbasis/path_algebra.hpp"

#include <set>
#include <utility>

namespace pathbasis {

Path make_path(const NetworkGraph& g, std::vector<NodeRef> nodes) {
  if (nodes.size() < 2) throw InvalidPath("path must contain at least two nodes");
  if (nodes.front().layer != 0) {
    throw InvalidPath("path must start at layer 0, got " + to_string(nodes.front()));
  }
  if (nodes.back().layer != g.last_layer()) {
    throw InvalidPath("path must end at layer " + std::to_string(g.last_layer()) +
                      ", got " + to_string(nodes.back()));
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i].layer >= nodes[i + 1].layer) {
      throw InvalidPath("path node layers must strictly increase at " +
                        to_string(nodes[i + 1]));
    }
    const EdgeRef e{nodes[i], nodes[i + 1]};
    if (!g.contains(e)) throw InvalidPath("path uses non-edge " + to_string(e));
  }
  return Path{std::move(nodes)};
}

std::vector<EdgeRef> edge_list(const Path& p) {
  std::vector<EdgeRef> es;
  es.reserve(p.nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    es.push_back({p.nodes[i], p.nodes[i + 1]});
  }
  return es;
}

void EdgeVector::add(const EdgeRef& e, int delta) {
  if (delta == 0) return;
  auto it = coefficients.find(e);
  if (it == coefficients.end()) {
    coefficients.emplace(e, delta);
  } else if ((it->second += delta) == 0) {
    coefficients.erase(it);
  }
}

EdgeVector path_edges(const Path& p) {
  EdgeVector v;
  for (const EdgeRef& e : edge_list(p)) v.add(e, 1);
  return v;
}

EdgeVector evaluate(const PathCombination& c) {
  EdgeVector v;
  for (const PathTerm& t : c.terms) {
    for (const EdgeRef& e : edge_list(t.path)) v.add(e, t.sign);
  }
  return v;
}

EdgeVector graph_remove_path(const EdgeVector& h, const Path& p) {
  EdgeVector out = h;
  for (const EdgeRef& e : edge_list(p)) {
    auto it = out.coefficients.find(e);
    if (it == out.coefficients.end() || it->second < 1) {
      throw PathNotSubgraph("edge " + to_string(e) + " is not present to remove");
    }
    if (--it->second == 0) out.coefficients.erase(it);
  }
  return out;
}

std::variant<Path, NotAPath> as_path(const NetworkGraph& g, const EdgeVector& v) {
  if (v.is_zero()) return NotAPath{NotAPathReason::Empty, "zero vector"};
  for (const auto& [e, c] : v.coefficients) {
    if (c != 1) {
      return NotAPath{NotAPathReason::NonBinaryCoefficient,
                      "coefficient " + std::to_string(c) + " on " + to_string(e)};
    }
  }

  std::map<NodeRef, EdgeRef> out_of;
  std::set<NodeRef> heads;
  for (const auto& [e, c] : v.coefficients) {
    if (!out_of.emplace(e.tail, e).second) {
      return NotAPath{NotAPathReason::Disconnected,
                      "two edges leave " + to_string(e.tail)};
    }
    if (!heads.insert(e.head).second) {
      return NotAPath{NotAPathReason::Disconnected,
                      "two edges enter " + to_string(e.head)};
    }
  }
  std::vector<NodeRef> starts;
  for (const auto& [tail, e] : out_of) {
    if (!heads.contains(tail)) starts.push_back(tail);
  }
  if (starts.size() != 1) {
    // Layers strictly increase along edges, so cycles are impossible and
    // multiple starts means multiple chains.
    return NotAPath{NotAPathReason::Disconnected,
                    std::to_string(starts.size()) + " chain starts"};
  }

  std::vector<NodeRef> nodes{starts.front()};
  for (auto it = out_of.find(nodes.back()); it != out_of.end();
       it = out_of.find(nodes.back())) {
    nodes.push_back(it->second.head);
  }
  if (nodes.size() != v.coefficients.size() + 1) {
    return NotAPath{NotAPathReason::Disconnected, "edges form more than one chain"};
  }
  if (nodes.front().layer != 0 || nodes.back().layer != g.last_layer()) {
    return NotAPath{NotAPathReason::WrongEndpoints,
                    "chain runs " + to_string(nodes.front()) + " to " +
                        to_string(nodes.back())};
  }
  return Path{std::move(nodes)};
}

namespace {

void dfs_paths(const NetworkGraph& g, std::vector<NodeRef>& stack,
               std::vector<Path>& out) {
  const NodeRef v = stack.back();
  if (v.layer == g.last_layer()) {
    out.push_back(Path{stack});
    return;
  }
  for (const EdgeRef& e : g.out_edges(v)) {
    stack.push_back(e.head);
    dfs_paths(g, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const NetworkGraph& g, std::uint64_t limit) {
  BigCount n = g.path_count();
  if (n > limit) throw PathCountExceedsLimit(std::move(n), limit);

  std::vector<Path> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<NodeRef> stack;
  for (int i = 1; i <= g.layer_size(0); ++i) {
    stack.assign(1, NodeRef{0, i});
    dfs_paths(g, stack, out);
  }
  return out;
}

std::string to_string(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (i) s += "->";
    s += to_string(p.nodes[i]);
  }
  return s;
}

}  // namespace pathbasis
