/*
  Layered fully connected network graphs.

  A network is a DAG of layers 0..L; edges come in complete bipartite blocks
  between layer pairs. Construction is deterministic: edges are kept in
  canonical order (from_layer, to_layer, tail index, head index) so that every
  downstream algorithm and serialization is reproducible.
*/
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathbasis/errors.hpp"

namespace pathbasis {

// i-th node of the l-th layer; indices are 1-based to match the usual
// O_i^l notation in layered-network literature.
struct NodeRef {
  int layer = 0;
  int index = 1;
  auto operator<=>(const NodeRef&) const = default;
};

struct EdgeRef {
  NodeRef tail;
  NodeRef head;

  bool operator==(const EdgeRef&) const = default;
  // Canonical order: block-major (tail layer, head layer), then tail index,
  // then head index. Matches the graph's edge enumeration order.
  auto operator<=>(const EdgeRef& o) const {
    if (auto c = tail.layer <=> o.tail.layer; c != 0) return c;
    if (auto c = head.layer <=> o.head.layer; c != 0) return c;
    if (auto c = tail.index <=> o.tail.index; c != 0) return c;
    return head.index <=> o.head.index;
  }
};

// Complete bipartite edge set between two layers.
struct LayerBlock {
  int from_layer = 0;
  int to_layer = 0;
  auto operator<=>(const LayerBlock&) const = default;
};

struct NetworkSpec {
  std::vector<int> layer_sizes;
  // Missing blocks means "all consecutive layer pairs".
  std::optional<std::vector<LayerBlock>> blocks;
  // Optional per-edge annotations; carried through but never used by any
  // algorithm here.
  std::map<EdgeRef, double> weights;
};

class NetworkGraph {
 public:
  int last_layer() const { return last_layer_; }
  const std::vector<int>& layer_sizes() const { return layer_sizes_; }
  int layer_size(int layer) const { return layer_sizes_.at(static_cast<std::size_t>(layer)); }
  const std::vector<LayerBlock>& blocks() const { return blocks_; }
  bool has_block(int from_layer, int to_layer) const;

  std::size_t edge_count() const { return edges_.size(); }         // m
  std::size_t hidden_node_count() const { return hidden_count_; }  // H
  std::size_t node_count() const { return node_offset_.back(); }

  const std::vector<EdgeRef>& edges() const { return edges_; }
  bool contains(const NodeRef& v) const;
  bool contains(const EdgeRef& e) const;
  // Position of e in the canonical edge order; throws if e is not an edge.
  std::size_t edge_index(const EdgeRef& e) const;

  // Number of layers skipped by e: head.layer - tail.layer - 1.
  int skip_degree(const EdgeRef& e) const;
  bool has_skip_edges() const { return has_skip_edges_; }

  std::span<const EdgeRef> out_edges(const NodeRef& v) const;
  std::span<const EdgeRef> in_edges(const NodeRef& v) const;

  std::optional<double> weight(const EdgeRef& e) const;

  // Exact number of input-to-output paths, by dynamic programming over the
  // DAG in layer order.
  BigCount path_count() const;

  friend NetworkGraph build_network(const NetworkSpec& spec);

 private:
  std::size_t node_id(const NodeRef& v) const;

  int last_layer_ = 0;
  std::vector<int> layer_sizes_;
  std::vector<LayerBlock> blocks_;  // sorted, deduplicated
  std::vector<EdgeRef> edges_;      // canonical order
  std::size_t hidden_count_ = 0;
  bool has_skip_edges_ = false;
  std::vector<std::size_t> node_offset_;  // node_id = node_offset_[layer] + index - 1
  // Per-node adjacency, each list sorted in canonical edge order.
  std::vector<std::vector<EdgeRef>> out_edges_;
  std::vector<std::vector<EdgeRef>> in_edges_;
  std::map<EdgeRef, double> weights_;
};

// Validates the spec and builds the graph. Throws InvalidSpec.
NetworkGraph build_network(const NetworkSpec& spec);

// "(layer,index)" / "(tail->head)" forms for diagnostics.
std::string to_string(const NodeRef& v);
std::string to_string(const EdgeRef& e);

}  // namespace pathbasis
