#include "dsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dsc {

namespace {

double choose2(long long x) { return 0.5 * static_cast<double>(x) * static_cast<double>(x - 1); }

double entropy(const std::vector<long long>& sums, long long total) {
  double h = 0.0;
  for (long long s : sums) {
    if (s > 0) {
      double p = static_cast<double>(s) / static_cast<double>(total);
      h -= p * std::log(p);
    }
  }
  return h;
}

double mutual_information(const ContingencyTable& t) {
  double mi = 0.0;
  double n = static_cast<double>(t.total);
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
      long long nij = t.counts[i][j];
      if (nij <= 0) continue;
      double pij = static_cast<double>(nij) / n;
      mi += pij * std::log(n * static_cast<double>(nij) /
                           (static_cast<double>(t.row_sums[i]) * static_cast<double>(t.col_sums[j])));
    }
  }
  return mi;
}

// E[MI] under the permutation model: the cell count n_ij follows a
// hypergeometric law given the margins, so the expectation is a finite sum
// accumulated through log-factorials.
double expected_mutual_information(const ContingencyTable& t) {
  long long n = t.total;
  std::vector<double> log_fact(static_cast<std::size_t>(n) + 1, 0.0);
  for (long long k = 2; k <= n; ++k)
    log_fact[static_cast<std::size_t>(k)] =
        log_fact[static_cast<std::size_t>(k - 1)] + std::log(static_cast<double>(k));
  auto lf = [&](long long k) { return log_fact[static_cast<std::size_t>(k)]; };

  double emi = 0.0;
  double dn = static_cast<double>(n);
  for (long long ai : t.row_sums) {
    for (long long bj : t.col_sums) {
      long long lo = std::max<long long>(1, ai + bj - n);
      long long hi = std::min(ai, bj);
      for (long long nij = lo; nij <= hi; ++nij) {
        double log_p = lf(ai) + lf(bj) + lf(n - ai) + lf(n - bj) - lf(n) - lf(nij) -
                       lf(ai - nij) - lf(bj - nij) - lf(n - ai - bj + nij);
        double term = (static_cast<double>(nij) / dn) *
                      std::log(dn * static_cast<double>(nij) /
                               (static_cast<double>(ai) * static_cast<double>(bj)));
        emi += std::exp(log_p) * term;
      }
    }
  }
  return emi;
}

}  // namespace

ContingencyTable contingency(const Clustering& truth, const Clustering& est) {
  if (truth.node_count() != est.node_count())
    throw std::invalid_argument("contingency: clusterings cover different universes");
  Clustering ct = truth.canonicalized();
  Clustering ce = est.canonicalized();
  std::size_t rows = ct.cluster_count();
  std::size_t cols = ce.cluster_count();
  ContingencyTable t;
  t.counts.assign(rows, std::vector<long long>(cols, 0));
  t.row_sums.assign(rows, 0);
  t.col_sums.assign(cols, 0);
  t.total = static_cast<long long>(truth.node_count());
  for (std::size_t v = 0; v < truth.node_count(); ++v) {
    auto i = static_cast<std::size_t>(ct.label(static_cast<NodeId>(v)));
    auto j = static_cast<std::size_t>(ce.label(static_cast<NodeId>(v)));
    ++t.counts[i][j];
    ++t.row_sums[i];
    ++t.col_sums[j];
  }
  return t;
}

double ari(const ContingencyTable& t) {
  if (t.total < 2) throw std::invalid_argument("ari: need at least 2 nodes");
  double index = 0.0;
  for (const auto& row : t.counts)
    for (long long nij : row) index += choose2(nij);
  double a = 0.0, b = 0.0;
  for (long long s : t.row_sums) a += choose2(s);
  for (long long s : t.col_sums) b += choose2(s);
  double expected = a * b / choose2(t.total);
  double max_index = 0.5 * (a + b);
  double denom = max_index - expected;
  if (std::abs(denom) < 1e-12) return 1.0;  // both partitions trivial and equal
  return (index - expected) / denom;
}

double nmi(const ContingencyTable& t) {
  if (t.total < 1) throw std::invalid_argument("nmi: empty universe");
  double hu = entropy(t.row_sums, t.total);
  double hv = entropy(t.col_sums, t.total);
  double denom = 0.5 * (hu + hv);
  if (denom < 1e-12) return 1.0;  // both single-cluster
  return mutual_information(t) / denom;
}

double ami(const ContingencyTable& t) {
  if (t.total < 2) throw std::invalid_argument("ami: need at least 2 nodes");
  double hu = entropy(t.row_sums, t.total);
  double hv = entropy(t.col_sums, t.total);
  double mi = mutual_information(t);
  double emi = expected_mutual_information(t);
  double denom = 0.5 * (hu + hv) - emi;
  if (std::abs(denom) < 1e-12) {
    return (t.row_sums.size() == 1 && t.col_sums.size() == 1) ? 1.0 : 0.0;
  }
  return (mi - emi) / denom;
}

PairMetrics pair_metrics(const Clustering& truth, const Clustering& est) {
  ContingencyTable t = contingency(truth, est);
  if (t.total < 2) throw std::invalid_argument("pair_metrics: need at least 2 nodes");
  auto ll_choose2 = [](long long x) { return x * (x - 1) / 2; };
  long long tp = 0;
  for (const auto& row : t.counts)
    for (long long nij : row) tp += ll_choose2(nij);
  long long truth_pos = 0, est_pos = 0;
  for (long long s : t.row_sums) truth_pos += ll_choose2(s);
  for (long long s : t.col_sums) est_pos += ll_choose2(s);
  long long all_pairs = ll_choose2(t.total);

  PairMetrics pm;
  pm.confusion.tp = tp;
  pm.confusion.fp = est_pos - tp;
  pm.confusion.fn = truth_pos - tp;
  pm.confusion.tn = all_pairs - est_pos - truth_pos + tp;
  pm.precision = est_pos == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(est_pos);
  pm.recall = truth_pos == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(truth_pos);
  long long neg_truth = pm.confusion.fp + pm.confusion.tn;
  pm.fpr = neg_truth == 0 ? 0.0
                          : static_cast<double>(pm.confusion.fp) / static_cast<double>(neg_truth);
  return pm;
}

double node_coverage(const Clustering& c) {
  if (c.node_count() == 0) return 0.0;
  std::vector<long long> sizes;
  Clustering canon = c.canonicalized();
  sizes.assign(canon.cluster_count(), 0);
  for (long long lab : canon.labels()) ++sizes[static_cast<std::size_t>(lab)];
  std::size_t covered = 0;
  for (long long lab : canon.labels()) {
    if (sizes[static_cast<std::size_t>(lab)] >= 2) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(c.node_count());
}

}  // namespace dsc
