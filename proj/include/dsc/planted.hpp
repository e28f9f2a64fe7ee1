#pragma once

#include <cstdint>

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"

namespace dsc {

struct PlantedPartition {
  Graph graph;
  Clustering truth;  // over the graph's node universe
};

// Planted-partition sampler: n_clusters blocks of cluster_size nodes,
// within-block edges with probability p_in, between-block with p_out.
// External ids are 0..N-1; every node is in the universe even if isolated.
// Deterministic per seed.
PlantedPartition generate_planted_partition(int n_clusters, int cluster_size,
                                            double p_in, double p_out,
                                            std::uint64_t seed);

}  // namespace dsc
