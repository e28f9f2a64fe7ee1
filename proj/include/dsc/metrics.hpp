#pragma once

#include <vector>

#include "dsc/clustering.hpp"

namespace dsc {

struct ContingencyTable {
  std::vector<std::vector<long long>> counts;  // rows: truth, cols: estimate
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  long long total = 0;
};

struct PairConfusion {
  long long tp = 0, fp = 0, fn = 0, tn = 0;
};

struct PairMetrics {
  double precision = 0.0, recall = 0.0, fpr = 0.0;
  PairConfusion confusion;
};

// Overlap counts between two clusterings over the same node universe.
ContingencyTable contingency(const Clustering& truth, const Clustering& est);

// Adjusted Rand Index in [-1, 1]; degenerate denominators (both partitions
// trivial) return 1.
double ari(const ContingencyTable& t);

// Mutual information normalized by the arithmetic mean of the entropies;
// both-single-cluster inputs return 1.
double nmi(const ContingencyTable& t);

// AMI = (MI - E[MI]) / (mean entropy - E[MI]) with the expected MI under
// the hypergeometric (permutation) model, accumulated via log-factorials.
double ami(const ContingencyTable& t);

// Precision/recall/FPR over the co-clustered equivalence relation on
// unordered node pairs. Empty-positive conventions: precision 1 when the
// estimate has no positive pairs, recall 1 when the truth has none, fpr 0
// when no negative truth pairs exist.
PairMetrics pair_metrics(const Clustering& truth, const Clustering& est);

// Fraction of nodes in clusters of size >= 2.
double node_coverage(const Clustering& c);

}  // namespace dsc
