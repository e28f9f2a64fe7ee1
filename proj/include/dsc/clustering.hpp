#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsc/graph.hpp"

namespace dsc {

// A partition of internal node ids 0..n-1 into labeled clusters. Labels are
// opaque; two clusterings are equivalent iff they induce the same partition.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<long long> labels) : labels_(std::move(labels)) {}
  static Clustering singletons(std::size_t n);

  std::size_t node_count() const { return labels_.size(); }
  long long label(NodeId v) const { return labels_[static_cast<std::size_t>(v)]; }
  void set_label(NodeId v, long long lab) { labels_[static_cast<std::size_t>(v)] = lab; }
  const std::vector<long long>& labels() const { return labels_; }

  // Clusters ordered by smallest member id, members sorted ascending.
  std::vector<NodeSet> clusters() const;
  std::size_t cluster_count() const;
  std::size_t cluster_size(NodeId v) const;  // size of v's cluster

  // Relabels clusters 0..K-1 in order of smallest member id.
  Clustering canonicalized() const;

 private:
  std::vector<long long> labels_;
};

// True iff the two clusterings induce the same partition (labels ignored).
bool same_partition(const Clustering& a, const Clustering& b);

// Splits each group of `group_of` into the connected components of its
// induced subgraph and returns the result as a clustering. Group values are
// opaque; output labels are canonical.
Clustering components_within_groups(const Graph& g, const std::vector<long long>& group_of);

// TSV io: one `<node_id>\t<cluster_id>` line per node, no header, ordered
// by internal id. Reading treats graph nodes absent from the file as fresh
// singletons and rejects ids that are not in the graph.
Clustering read_clustering_tsv(const Graph& g, const std::string& path);
void write_clustering_tsv(const Graph& g, const Clustering& c, const std::string& path);

}  // namespace dsc
