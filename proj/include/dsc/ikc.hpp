#pragma once

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"

namespace dsc {

// Iterative k-core clustering: repeatedly extract the k-core for the
// largest k with a non-empty core and k >= k_min, splitting each extracted
// core into connected components; nodes left when no qualifying core
// remains become singletons.
Clustering ikc_cluster(const Graph& g, int k_min = 1);

}  // namespace dsc
