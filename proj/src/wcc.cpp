#include "dsc/wcc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dsc/maxflow.hpp"

namespace dsc {

Clustering cc_treatment(const Graph& g, const Clustering& c) {
  if (c.node_count() != g.node_count())
    throw std::invalid_argument("cc_treatment: clustering does not cover the graph");
  return components_within_groups(g, c.labels());
}

Clustering wcc_treatment(const Graph& g, const Clustering& c,
                         const WellConnectednessThreshold& thr) {
  if (c.node_count() != g.node_count())
    throw std::invalid_argument("wcc_treatment: clustering does not cover the graph");

  std::vector<NodeSet> work;
  {
    // Start from connected pieces; min cuts are only defined on those.
    Clustering split = cc_treatment(g, c);
    for (NodeSet& piece : split.clusters()) work.push_back(std::move(piece));
  }

  std::vector<NodeSet> final_sets;
  while (!work.empty()) {
    NodeSet s = std::move(work.back());
    work.pop_back();
    if (s.size() <= 1) {
      final_sets.push_back(std::move(s));
      continue;
    }
    Graph h = induced_subgraph(g, s);
    GlobalCut cut = min_cut_global(h);
    if (cut.cut_weight > thr.bound(s.size())) {
      final_sets.push_back(std::move(s));
      continue;
    }
    // Split along the min cut; each side may itself be disconnected, so
    // push its components back separately.
    for (const NodeSet* side : {&cut.side_a, &cut.side_b}) {
      NodeSet mapped;
      mapped.reserve(side->size());
      for (NodeId local : *side) mapped.push_back(s[static_cast<std::size_t>(local)]);
      std::sort(mapped.begin(), mapped.end());
      Graph piece = induced_subgraph(g, mapped);
      for (const NodeSet& comp : connected_components(piece)) {
        NodeSet comp_mapped;
        comp_mapped.reserve(comp.size());
        for (NodeId local : comp) comp_mapped.push_back(mapped[static_cast<std::size_t>(local)]);
        work.push_back(std::move(comp_mapped));
      }
    }
  }

  // Deterministic labels keyed by smallest member.
  std::sort(final_sets.begin(), final_sets.end(),
            [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
  std::vector<long long> labels(g.node_count(), -1);
  for (std::size_t i = 0; i < final_sets.size(); ++i) {
    for (NodeId v : final_sets[i]) labels[static_cast<std::size_t>(v)] = static_cast<long long>(i);
  }
  return Clustering(std::move(labels));
}

}  // namespace dsc
