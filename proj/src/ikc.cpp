#include "dsc/ikc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dsc {

Clustering ikc_cluster(const Graph& g, int k_min) {
  if (k_min < 0) throw std::invalid_argument("ikc_cluster: k_min must be non-negative");
  const std::size_t n = g.node_count();
  std::vector<long long> group(n, -1);
  long long next_group = 0;

  NodeSet remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    Graph h = induced_subgraph(g, remaining);
    std::vector<int> cores = core_numbers(h);
    int k_max = cores.empty() ? 0 : *std::max_element(cores.begin(), cores.end());
    if (k_max < k_min) {
      // No qualifying core left; everything remaining is unclustered.
      for (NodeId v : remaining) group[static_cast<std::size_t>(v)] = next_group++;
      break;
    }
    NodeSet extracted;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (cores[i] >= k_max) {
        group[static_cast<std::size_t>(remaining[i])] = next_group;
        extracted.push_back(remaining[i]);
      }
    }
    ++next_group;
    NodeSet next;
    next.reserve(remaining.size() - extracted.size());
    std::set_difference(remaining.begin(), remaining.end(), extracted.begin(), extracted.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
  }
  // Each extracted core may have several components; every component is its
  // own community.
  return components_within_groups(g, group);
}

}  // namespace dsc
