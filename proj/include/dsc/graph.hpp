#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dsc {

using NodeId = int;                   // internal id, 0..n-1
using ExternalId = long long;         // id as it appears in edgelist files
using NodeSet = std::vector<NodeId>;  // kept sorted ascending, no duplicates

struct Edge {
  NodeId u, v;  // u < v
};

// Immutable undirected simple graph. Nodes are the ids mentioned in the
// input edgelist, internally renumbered in first-appearance order.
// Self-loops are dropped on construction (counted), parallel edges are
// collapsed keeping the first weight seen.
class Graph {
 public:
  Graph() = default;
  // `raw_edges` carries external ids; `universe` lists external ids that
  // must exist as nodes even if isolated (may be empty). Ids in edges are
  // appended to the universe in first-appearance order.
  Graph(const std::vector<std::pair<ExternalId, ExternalId>>& raw_edges,
        const std::vector<ExternalId>& universe = {},
        const std::vector<double>* weights = nullptr);

  static Graph load_edgelist(const std::string& path, bool weighted = false);
  void write_edgelist(const std::string& path) const;

  std::size_t node_count() const { return external_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_weighted() const { return weighted_; }
  double edge_weight(std::size_t e) const { return weighted_ ? weights_[e] : 1.0; }
  double total_edge_weight() const;

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }
  // Weight of the arc to neighbors(u)[i], aligned with neighbors().
  std::span<const double> neighbor_weights(NodeId u) const {
    return {adj_w_.data() + offsets_[u], adj_w_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
  double strength(NodeId u) const;  // weighted degree

  ExternalId external_id(NodeId u) const { return external_[u]; }
  std::optional<NodeId> internal_id(ExternalId ext) const;
  const std::vector<ExternalId>& external_ids() const { return external_; }

  std::size_t self_loops_dropped() const { return self_loops_dropped_; }
  std::size_t duplicate_edges_collapsed() const { return duplicates_collapsed_; }
  bool has_edge(NodeId u, NodeId v) const;

 private:
  std::vector<ExternalId> external_;
  std::unordered_map<ExternalId, NodeId> to_internal_;
  std::vector<Edge> edges_;       // sorted by (u, v)
  std::vector<double> weights_;   // aligned with edges_ when weighted
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<double> adj_w_;
  bool weighted_ = false;
  std::size_t self_loops_dropped_ = 0;
  std::size_t duplicates_collapsed_ = 0;

  void build_adjacency();
};

// Subgraph induced by `members` (must be non-empty, sorted, within range).
// New internal ids follow ascending original internal id; external ids are
// inherited, so mappings compose with the parent graph's.
Graph induced_subgraph(const Graph& g, const NodeSet& members);

// Components ordered by smallest member id; members sorted ascending.
std::vector<NodeSet> connected_components(const Graph& g);

// Maximum node set whose induced subgraph has min degree >= k (possibly empty).
NodeSet k_core(const Graph& g, int k);

// Per-node core numbers (largest k such that the node is in the k-core).
std::vector<int> core_numbers(const Graph& g);

}  // namespace dsc
