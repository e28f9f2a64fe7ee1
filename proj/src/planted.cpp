#include "dsc/planted.hpp"

#include <stdexcept>

#include "dsc/rng.hpp"

namespace dsc {

PlantedPartition generate_planted_partition(int n_clusters, int cluster_size, double p_in,
                                            double p_out, std::uint64_t seed) {
  if (n_clusters < 1 || cluster_size < 1)
    throw std::invalid_argument("generate_planted_partition: sizes must be >= 1");
  if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0)
    throw std::invalid_argument("generate_planted_partition: probabilities must be in [0, 1]");

  const long long n = static_cast<long long>(n_clusters) * cluster_size;
  Rng rng(seed);
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  std::vector<ExternalId> universe(static_cast<std::size_t>(n));
  std::vector<long long> truth(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) {
    universe[static_cast<std::size_t>(v)] = v;
    truth[static_cast<std::size_t>(v)] = v / cluster_size;
  }
  for (long long i = 0; i < n; ++i) {
    for (long long j = i + 1; j < n; ++j) {
      double p = truth[static_cast<std::size_t>(i)] == truth[static_cast<std::size_t>(j)] ? p_in : p_out;
      // uniform() is in [0, 1), so p = 0 never fires and p = 1 always does.
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  PlantedPartition out{Graph(edges, universe, nullptr), Clustering(std::move(truth))};
  return out;
}

}  // namespace dsc
