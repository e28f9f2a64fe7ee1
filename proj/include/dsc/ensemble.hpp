#pragma once

#include <vector>

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"

namespace dsc {

// Agreement counters for one edge {u, v} of the base network:
//   m_tilde — input clusterings placing u and v in the same cluster
//   m       — input clusterings placing u and v each in a non-singleton cluster
//   weight  — 0 when m_tilde = 0, else m_tilde / m (positive)
struct EnsembleEdgeRecord {
  NodeId u, v;
  int m_tilde = 0;
  int m = 0;
  double weight = 0.0;
};

struct MergerConfig {
  double threshold = -1.0;     // negative: retain every positive-weight edge
  bool weighted_output = false;
  int weighting_strategy = 0;  // only strategy 0 is defined
};

// One record per edge of g, ordered by (u, v). Requires >= 1 clustering,
// each covering the node universe of g.
std::vector<EnsembleEdgeRecord> compute_edge_weights(
    const Graph& g, const std::vector<Clustering>& clusterings);

// The merged network: edges with weight > 0 and weight >= threshold
// survive; the node universe is preserved (nodes may become isolated).
// Weights are attached iff weighted_output.
Graph build_merged_network(const Graph& g,
                           const std::vector<EnsembleEdgeRecord>& records,
                           const MergerConfig& cfg);

}  // namespace dsc
