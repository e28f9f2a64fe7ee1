#pragma once

#include <utility>
#include <vector>

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"
#include "dsc/rational.hpp"

namespace dsc {

struct DecompositionLayer {
  NodeSet members;
  Rational level;  // optimal objective value at this step
  int index = 0;   // 1-based step number
};

// Per-node density values. Exact entries are populated for the flow-based
// methods; approximate ones come from the FISTA solver.
struct VertexValues {
  std::vector<double> values;
  std::vector<Rational> exact;  // empty when approximate
  bool is_exact = false;
};

// The maximal set S maximizing (|E(S)| + sum of bonus over S) / |S|, with
// the exact optimum. Solved by binary search on the guess density over a
// grid of granularity 1/(n(n-1)), each probe answered by one max-flow
// min-cut; the final set is the maximal source side at the last feasible
// guess. bonus[v] counts edges from v to already-extracted vertices.
// Throws if the graph has no edges and every bonus is zero.
std::pair<NodeSet, Rational> densest_subgraph(const Graph& g,
                                              const std::vector<long long>& bonus);

struct DenseDecomposition {
  std::vector<DecompositionLayer> layers;
  VertexValues values;
};

// Peels the graph into layers of strictly decreasing density, where step i
// maximizes (|E(S)| + |E(S, U_{i-1})|) / |S| over the remaining vertices.
DenseDecomposition dense_decomposition(const Graph& g);

// Groups nodes with equal exact values, split into connected components.
Clustering dsc_flow_cluster(const Graph& g);

struct FlowIterResult {
  Clustering clustering;
  VertexValues values;  // density of each node's extraction; singletons get 0
};

// Iterative extraction: repeatedly removes the maximal densest subgraph of
// the remaining graph (no bonus terms; each round stands alone). Extracted
// sets are split into connected components; vertices isolated along the way
// end as singletons.
FlowIterResult dsc_flow_iter_cluster(const Graph& g);

}  // namespace dsc
