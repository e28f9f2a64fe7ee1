#pragma once

#include <utility>
#include <vector>

#include "dsc/clustering.hpp"
#include "dsc/dense_decomposition.hpp"
#include "dsc/graph.hpp"

namespace dsc {

// State of the accelerated solve for
//     minimize sum_u b_u^2   over fractional edge orientations,
// where x[e] is the fraction of edge e assigned to its smaller endpoint
// (the rest goes to the larger one) and b_u is the total load on u.
struct EdgeLoadState {
  std::vector<double> x;       // per edge, in [0, 1]
  std::vector<double> load;    // b_u per node, consistent with x
  std::vector<double> x_prev;  // momentum buffers
  std::vector<double> y;
  double t = 1.0;
  int iterations_run = 0;
};

// Runs n_iters FISTA steps from the symmetric start x = 1/2, step size
// 1/(2*max_degree), projecting each edge variable back onto [0, 1].
EdgeLoadState fista_state(const Graph& g, int n_iters);

// The per-node loads after n_iters steps (tagged approximate).
VertexValues fista_solve(const Graph& g, int n_iters);

// Rounds loads half-up to integers, groups equal values, splits groups into
// connected components.
Clustering dsc_fista_int_cluster(const Graph& g, int n_iters);

// Removes the minimum-load vertex (ties by id), handing its edge fractions
// to surviving neighbors, and returns the suffix with maximum plain density
// |E(S)|/|S| (ties prefer the earlier, larger set). Requires >= 1 edge.
std::pair<NodeSet, double> fractional_peel(const Graph& g, const EdgeLoadState& state);

struct FistaIterResult {
  Clustering clustering;
  std::vector<double> extraction_density;  // per node; singletons get 0
};

// Iterative extraction driven by a fresh FISTA solve + fractional peel on
// each remaining graph.
FistaIterResult dsc_fista_iter_cluster(const Graph& g, int n_iters);

}  // namespace dsc
