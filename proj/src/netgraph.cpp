#include "pathbasis/netgraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pathbasis {

bool NetworkGraph::has_block(int from_layer, int to_layer) const {
  return std::binary_search(blocks_.begin(), blocks_.end(),
                            LayerBlock{from_layer, to_layer});
}

bool NetworkGraph::contains(const NodeRef& v) const {
  return v.layer >= 0 && v.layer <= last_layer_ && v.index >= 1 &&
         v.index <= layer_sizes_[static_cast<std::size_t>(v.layer)];
}

bool NetworkGraph::contains(const EdgeRef& e) const {
  return contains(e.tail) && contains(e.head) &&
         has_block(e.tail.layer, e.head.layer);
}

std::size_t NetworkGraph::edge_index(const EdgeRef& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) {
    throw Error("edge_index: edge (" + std::to_string(e.tail.layer) + "," +
                std::to_string(e.tail.index) + ")->(" +
                std::to_string(e.head.layer) + "," +
                std::to_string(e.head.index) + ") not in graph");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

int NetworkGraph::skip_degree(const EdgeRef& e) const {
  if (!contains(e)) throw Error("skip_degree: edge not in graph");
  return e.head.layer - e.tail.layer - 1;
}

std::size_t NetworkGraph::node_id(const NodeRef& v) const {
  return node_offset_[static_cast<std::size_t>(v.layer)] +
         static_cast<std::size_t>(v.index - 1);
}

std::span<const EdgeRef> NetworkGraph::out_edges(const NodeRef& v) const {
  if (!contains(v)) throw Error("out_edges: node not in graph");
  return out_edges_[node_id(v)];
}

std::span<const EdgeRef> NetworkGraph::in_edges(const NodeRef& v) const {
  if (!contains(v)) throw Error("in_edges: node not in graph");
  return in_edges_[node_id(v)];
}

std::optional<double> NetworkGraph::weight(const EdgeRef& e) const {
  auto it = weights_.find(e);
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

BigCount NetworkGraph::path_count() const {
  // ways[n] = number of paths from any layer-0 node to node n
  std::vector<BigCount> ways(node_count(), 0);
  for (int i = 1; i <= layer_sizes_[0]; ++i) {
    ways[node_id({0, i})] = 1;
  }
  // Edges are block-major but node order follows layers; accumulate per node
  // in layer order so all predecessors are final before a node is read.
  BigCount total = 0;
  for (int l = 1; l <= last_layer_; ++l) {
    for (int i = 1; i <= layer_sizes_[static_cast<std::size_t>(l)]; ++i) {
      NodeRef v{l, i};
      BigCount& acc = ways[node_id(v)];
      for (const EdgeRef& e : in_edges(v)) acc += ways[node_id(e.tail)];
      if (l == last_layer_) total += acc;
    }
  }
  if (last_layer_ == 0) return 0;
  return total;
}

NetworkGraph build_network(const NetworkSpec& spec) {
  if (spec.layer_sizes.size() < 2) {
    throw InvalidSpec("network needs at least two layers");
  }
  for (std::size_t l = 0; l < spec.layer_sizes.size(); ++l) {
    if (spec.layer_sizes[l] < 1) {
      throw InvalidSpec("layer " + std::to_string(l) + " is empty");
    }
  }
  const int last = static_cast<int>(spec.layer_sizes.size()) - 1;

  std::vector<LayerBlock> blocks;
  if (spec.blocks.has_value()) {
    blocks = *spec.blocks;
    for (const LayerBlock& b : blocks) {
      if (b.from_layer < 0 || b.to_layer > last || b.from_layer >= b.to_layer) {
        throw InvalidSpec("block (" + std::to_string(b.from_layer) + "," +
                          std::to_string(b.to_layer) + ") out of range");
      }
    }
    std::sort(blocks.begin(), blocks.end());
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end()) {
      throw InvalidSpec("duplicate block");
    }
  } else {
    for (int l = 0; l < last; ++l) blocks.push_back({l, l + 1});
  }

  NetworkGraph g;
  g.last_layer_ = last;
  g.layer_sizes_ = spec.layer_sizes;
  g.blocks_ = blocks;

  g.node_offset_.assign(spec.layer_sizes.size() + 1, 0);
  for (std::size_t l = 0; l < spec.layer_sizes.size(); ++l) {
    g.node_offset_[l + 1] =
        g.node_offset_[l] + static_cast<std::size_t>(spec.layer_sizes[l]);
  }
  for (int l = 1; l < last; ++l) {
    g.hidden_count_ += static_cast<std::size_t>(spec.layer_sizes[static_cast<std::size_t>(l)]);
  }

  // Blocks are already sorted, so appending per block in (tail, head) index
  // order yields the canonical edge order directly.
  for (const LayerBlock& b : blocks) {
    if (b.to_layer - b.from_layer > 1) g.has_skip_edges_ = true;
    const int nt = spec.layer_sizes[static_cast<std::size_t>(b.from_layer)];
    const int nh = spec.layer_sizes[static_cast<std::size_t>(b.to_layer)];
    for (int i = 1; i <= nt; ++i) {
      for (int j = 1; j <= nh; ++j) {
        g.edges_.push_back({{b.from_layer, i}, {b.to_layer, j}});
      }
    }
  }

  g.out_edges_.resize(g.node_count());
  g.in_edges_.resize(g.node_count());
  for (const EdgeRef& e : g.edges_) {
    g.out_edges_[g.node_id(e.tail)].push_back(e);
    g.in_edges_[g.node_id(e.head)].push_back(e);
  }
  // Edge order within each adjacency list must also be canonical.
  for (auto& lst : g.out_edges_) std::sort(lst.begin(), lst.end());
  for (auto& lst : g.in_edges_) std::sort(lst.begin(), lst.end());

  for (const auto& [e, w] : spec.weights) {
    if (!g.contains(e)) throw InvalidSpec("weight names an edge not in the graph");
    g.weights_.emplace(e, w);
  }
  return g;
}

std::string to_string(const NodeRef& v) {
  return "(" + std::to_string(v.layer) + "," + std::to_string(v.index) + ")";
}

std::string to_string(const EdgeRef& e) {
  return to_string(e.tail) + "->" + to_string(e.head);
}

}  // namespace pathbasis
