#pragma once

#include <cstdint>
#include <string>

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"

namespace dsc {

struct ObjectiveSpec {
  enum class Kind { modularity, cpm };
  Kind kind = Kind::modularity;
  double resolution = 1.0;  // gamma, used by cpm

  static ObjectiveSpec mod() { return {Kind::modularity, 1.0}; }
  static ObjectiveSpec cpm(double gamma) { return {Kind::cpm, gamma}; }
};

// Three-phase Leiden loop (local moving, refinement, aggregation) until no
// improving move or the iteration cap. Deterministic for a fixed seed;
// honors edge weights; every output cluster is connected.
Clustering leiden_cluster(const Graph& g, const ObjectiveSpec& obj,
                          std::uint64_t seed = 0, int iterations = 10);

// Exact objective value of a partition.
//   cpm:        sum_c [ w_in(c) - gamma * C(n_c, 2) ]
//   modularity: sum_c [ w_in(c)/W - (deg_c / 2W)^2 ]
double quality(const Graph& g, const Clustering& c, const ObjectiveSpec& obj);

}  // namespace dsc
