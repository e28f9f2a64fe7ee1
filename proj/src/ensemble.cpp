#include "dsc/ensemble.hpp"

#include <stdexcept>
#include <unordered_map>

namespace dsc {

std::vector<EnsembleEdgeRecord> compute_edge_weights(
    const Graph& g, const std::vector<Clustering>& clusterings) {
  if (clusterings.empty())
    throw std::invalid_argument("compute_edge_weights: need at least one clustering");
  for (const Clustering& c : clusterings) {
    if (c.node_count() != g.node_count())
      throw std::invalid_argument("compute_edge_weights: clustering does not cover the graph");
  }

  // Per clustering: cluster size lookup by label.
  std::vector<std::unordered_map<long long, long long>> sizes(clusterings.size());
  for (std::size_t i = 0; i < clusterings.size(); ++i) {
    for (long long lab : clusterings[i].labels()) ++sizes[i][lab];
  }

  std::vector<EnsembleEdgeRecord> records;
  records.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    EnsembleEdgeRecord rec;
    rec.u = e.u;
    rec.v = e.v;
    for (std::size_t i = 0; i < clusterings.size(); ++i) {
      long long lu = clusterings[i].label(e.u);
      long long lv = clusterings[i].label(e.v);
      if (lu == lv) ++rec.m_tilde;
      if (sizes[i].at(lu) >= 2 && sizes[i].at(lv) >= 2) ++rec.m;
    }
    rec.weight = rec.m_tilde == 0
                     ? 0.0
                     : static_cast<double>(rec.m_tilde) / static_cast<double>(rec.m);
    records.push_back(rec);
  }
  return records;
}

Graph build_merged_network(const Graph& g,
                           const std::vector<EnsembleEdgeRecord>& records,
                           const MergerConfig& cfg) {
  if (records.size() != g.edge_count())
    throw std::invalid_argument("build_merged_network: records do not cover the edges");
  if (cfg.weighting_strategy != 0)
    throw std::invalid_argument("build_merged_network: unknown weighting strategy");

  std::vector<std::pair<ExternalId, ExternalId>> kept;
  std::vector<double> weights;
  for (const EnsembleEdgeRecord& rec : records) {
    if (rec.weight > 0.0 && rec.weight >= cfg.threshold) {
      kept.emplace_back(g.external_id(rec.u), g.external_id(rec.v));
      weights.push_back(rec.weight);
    }
  }
  return Graph(kept, g.external_ids(), cfg.weighted_output ? &weights : nullptr);
}

}  // namespace dsc
