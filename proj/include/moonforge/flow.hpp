#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace moonforge {

// Pair-assignment network for orienting the complete graph on n vertices:
//
//   source -> pair{u,v}   capacity 1      (one node per unordered pair)
//   pair{u,v} -> u, v     capacity 1
//   u -> sink             capacity target[u]
//
// A flow saturating every source arc assigns each pair's "win" to exactly
// one endpoint with each vertex winning target[u] times. Pairs are numbered
// in lexicographic (u < v) order; arcs are laid out in a fixed order so the
// maximum flow found is reproducible.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::span<const std::int64_t> targets);

  std::size_t vertex_count() const { return n_; }
  std::size_t pair_count() const { return pairs_; }
  std::size_t node_count() const { return nodes_; }
  std::size_t arc_count() const { return to_.size(); }

  // Blocking-flow (Dinic) maximum flow from the current flow. Returns the
  // total flow value. Calling it again is a no-op.
  std::int64_t max_flow();
  std::int64_t flow_value() const { return flow_; }

  // For pair index p = {u, v} with u < v: true iff its unit went to u.
  // Only meaningful once the source arc of p is saturated.
  bool pair_won_by_first(std::size_t p) const;
  bool pair_saturated(std::size_t p) const;

 private:
  using Node = std::int32_t;
  using Arc = std::int32_t;

  Node source() const { return 0; }
  Node sink() const { return static_cast<Node>(nodes_ - 1); }
  Node pair_node(std::size_t p) const { return static_cast<Node>(1 + p); }
  Node vertex_node(std::size_t u) const { return static_cast<Node>(1 + pairs_ + u); }

  void add_arc(Node from, Node to, std::int32_t cap, std::vector<Node>& tails);
  bool build_levels();
  bool augment_once();

  std::size_t n_;
  std::size_t pairs_;
  std::size_t nodes_;
  std::int64_t flow_ = 0;

  // Arc e and e ^ 1 are mutual reverses.
  std::vector<Node> to_;
  std::vector<std::int32_t> cap_;
  // CSR adjacency: arcs leaving node v are order_[first_[v] .. first_[v+1]).
  std::vector<Arc> first_;
  std::vector<Arc> order_;
  // Arc id of source -> pair p and of pair p -> first endpoint.
  std::vector<Arc> source_arc_;
  std::vector<Arc> first_endpoint_arc_;

  std::vector<std::int32_t> level_;
  std::vector<Arc> cursor_;
};

}  // namespace moonforge
