#include "moonforge/flow.hpp"

#include <limits>
#include <queue>

#include "moonforge/errors.hpp"

namespace moonforge {

FlowNetwork::FlowNetwork(std::span<const std::int64_t> targets)
    : n_(targets.size()), pairs_(n_ < 2 ? 0 : n_ * (n_ - 1) / 2), nodes_(pairs_ + n_ + 2) {
  const std::size_t arcs = 2 * (3 * pairs_ + n_);
  if (arcs > static_cast<std::size_t>(std::numeric_limits<Arc>::max()) ||
      nodes_ > static_cast<std::size_t>(std::numeric_limits<Node>::max())) {
    throw ValidationError("flow network for " + std::to_string(n_) + " vertices is too large");
  }
  to_.reserve(arcs);
  cap_.reserve(arcs);
  std::vector<Node> tails;
  tails.reserve(arcs);
  source_arc_.reserve(pairs_);
  first_endpoint_arc_.reserve(pairs_);

  std::size_t p = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v, ++p) {
      source_arc_.push_back(static_cast<Arc>(to_.size()));
      add_arc(source(), pair_node(p), 1, tails);
      first_endpoint_arc_.push_back(static_cast<Arc>(to_.size()));
      add_arc(pair_node(p), vertex_node(u), 1, tails);
      add_arc(pair_node(p), vertex_node(v), 1, tails);
    }
  }
  for (std::size_t u = 0; u < n_; ++u) {
    if (targets[u] < 0) throw ValidationError("negative target in flow network");
    auto cap = targets[u] > std::numeric_limits<std::int32_t>::max()
                   ? std::numeric_limits<std::int32_t>::max()
                   : static_cast<std::int32_t>(targets[u]);
    add_arc(vertex_node(u), sink(), cap, tails);
  }

  // Stable counting sort of arcs by tail keeps insertion order per node.
  first_.assign(nodes_ + 1, 0);
  for (Node t : tails) ++first_[t + 1];
  for (std::size_t v = 0; v < nodes_; ++v) first_[v + 1] += first_[v];
  order_.resize(to_.size());
  std::vector<Arc> fill(first_.begin(), first_.end() - 1);
  for (std::size_t e = 0; e < tails.size(); ++e) order_[fill[tails[e]]++] = static_cast<Arc>(e);

  level_.resize(nodes_);
  cursor_.resize(nodes_);
}

void FlowNetwork::add_arc(Node from, Node to, std::int32_t cap, std::vector<Node>& tails) {
  to_.push_back(to);
  cap_.push_back(cap);
  tails.push_back(from);
  to_.push_back(from);
  cap_.push_back(0);
  tails.push_back(to);
}

bool FlowNetwork::build_levels() {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<Node> frontier;
  level_[source()] = 0;
  frontier.push(source());
  while (!frontier.empty()) {
    Node v = frontier.front();
    frontier.pop();
    for (Arc i = first_[v]; i < first_[v + 1]; ++i) {
      Arc e = order_[i];
      if (cap_[e] > 0 && level_[to_[e]] < 0) {
        level_[to_[e]] = level_[v] + 1;
        frontier.push(to_[e]);
      }
    }
  }
  return level_[sink()] >= 0;
}

// Every augmenting path leaves the source through a unit arc, so each path
// carries exactly one unit.
bool FlowNetwork::augment_once() {
  std::vector<Arc> path;
  Node v = source();
  while (true) {
    if (v == sink()) {
      for (Arc e : path) {
        cap_[e] -= 1;
        cap_[e ^ 1] += 1;
      }
      return true;
    }
    bool advanced = false;
    for (; cursor_[v] < first_[v + 1]; ++cursor_[v]) {
      Arc e = order_[cursor_[v]];
      if (cap_[e] > 0 && level_[to_[e]] == level_[v] + 1) {
        path.push_back(e);
        v = to_[e];
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    // Dead end: prune v from this phase and retreat.
    level_[v] = -1;
    if (path.empty()) return false;
    Arc back = path.back();
    path.pop_back();
    v = to_[back ^ 1];
    ++cursor_[v];
  }
}

std::int64_t FlowNetwork::max_flow() {
  while (build_levels()) {
    for (std::size_t v = 0; v < nodes_; ++v) cursor_[v] = first_[v];
    while (augment_once()) ++flow_;
  }
  return flow_;
}

bool FlowNetwork::pair_saturated(std::size_t p) const { return cap_[source_arc_[p]] == 0; }

bool FlowNetwork::pair_won_by_first(std::size_t p) const {
  return cap_[first_endpoint_arc_[p]] == 0;
}

}  // namespace moonforge
