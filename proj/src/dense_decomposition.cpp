#include "dsc/dense_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "dsc/maxflow.hpp"

namespace dsc {

namespace {

// Probe "does some set S achieve (|E(S)| + bonus(S)) / |S| > k/D ?" with a
// single min cut on the standard vertex/edge-gadget reduction, capacities
// pre-scaled by D. When want_set is true and the answer is yes, also
// extracts the maximal such witness (the maximal min-cut source side).
struct ProbeResult {
  bool feasible = false;
  NodeSet witness;  // maximal maximizer when requested
};

ProbeResult probe_density(const Graph& g, const std::vector<long long>& bonus,
                          long long k, long long scale_d, bool want_set) {
  const long long n = static_cast<long long>(g.node_count());
  const long long m = static_cast<long long>(g.edge_count());
  const long long bonus_total = std::accumulate(bonus.begin(), bonus.end(), 0LL);

  ProbeResult out;
  if (k < 0) {
    // Any non-empty set beats a negative guess.
    out.feasible = true;
    if (want_set) {
      out.witness.resize(static_cast<std::size_t>(n));
      std::iota(out.witness.begin(), out.witness.end(), 0);
    }
    return out;
  }

  const long long full_cap = scale_d * (m + bonus_total);
  const long long inf_cap = full_cap + 1;
  const int src = static_cast<int>(n + m);
  const int snk = src + 1;
  FlowNetwork net(static_cast<int>(n + m + 2));
  for (long long j = 0; j < m; ++j) {
    const Edge& e = g.edges()[static_cast<std::size_t>(j)];
    net.add_arc(src, static_cast<int>(n + j), scale_d);
    net.add_arc(static_cast<int>(n + j), e.u, inf_cap);
    net.add_arc(static_cast<int>(n + j), e.v, inf_cap);
  }
  for (long long v = 0; v < n; ++v) {
    if (bonus[static_cast<std::size_t>(v)] > 0)
      net.add_arc(src, static_cast<int>(v), scale_d * bonus[static_cast<std::size_t>(v)]);
    if (k > 0) net.add_arc(static_cast<int>(v), snk, k);
  }

  CutResult cut = net.max_flow(src, snk, CutSide::maximal_source);
  out.feasible = cut.max_flow_value < full_cap;
  if (out.feasible && want_set) {
    for (int v : cut.source_side) {
      if (v < n) out.witness.push_back(v);
    }
    std::sort(out.witness.begin(), out.witness.end());
  }
  return out;
}

Rational set_objective(const Graph& g, const std::vector<long long>& bonus, const NodeSet& s) {
  std::vector<char> in_set(g.node_count(), 0);
  for (NodeId v : s) in_set[static_cast<std::size_t>(v)] = 1;
  long long value = 0;
  for (const Edge& e : g.edges()) {
    if (in_set[static_cast<std::size_t>(e.u)] && in_set[static_cast<std::size_t>(e.v)]) ++value;
  }
  for (NodeId v : s) value += bonus[static_cast<std::size_t>(v)];
  return Rational(value, static_cast<long long>(s.size()));
}

}  // namespace

std::pair<NodeSet, Rational> densest_subgraph(const Graph& g,
                                              const std::vector<long long>& bonus) {
  const long long n = static_cast<long long>(g.node_count());
  const long long m = static_cast<long long>(g.edge_count());
  if (n == 0) throw std::invalid_argument("densest_subgraph: empty graph");
  if (bonus.size() != g.node_count())
    throw std::invalid_argument("densest_subgraph: bonus size mismatch");
  for (long long b : bonus)
    if (b < 0) throw std::invalid_argument("densest_subgraph: negative bonus");

  const long long bonus_total = std::accumulate(bonus.begin(), bonus.end(), 0LL);
  if (m == 0) {
    if (bonus_total == 0)
      throw std::invalid_argument("densest_subgraph: no edges and zero bonus (density undefined)");
    // Without edges the objective is the average bonus, maximized exactly by
    // the vertices with maximum bonus.
    long long best = *std::max_element(bonus.begin(), bonus.end());
    NodeSet set;
    for (long long v = 0; v < n; ++v)
      if (bonus[static_cast<std::size_t>(v)] == best) set.push_back(static_cast<NodeId>(v));
    return {set, Rational(best, 1)};
  }

  // Two distinct achievable objective values differ by at least 1/(n(n-1)),
  // so guesses live on the grid k/D with D = n(n-1). Once the bracket is a
  // single grid step, every set beating the lower end is exactly optimal and
  // the maximal one is the answer.
  const long long scale_d = n <= 1 ? 1 : n * (n - 1);
  if (static_cast<double>(scale_d) * static_cast<double>(m + bonus_total + 1) > 4.0e18)
    throw std::overflow_error("densest_subgraph: instance too large for exact integer search");

  long long k_lo = -1;
  long long k_hi = scale_d * (m + bonus_total) + 1;
  while (k_hi - k_lo > 1) {
    long long mid = k_lo + (k_hi - k_lo) / 2;
    ProbeResult pr = probe_density(g, bonus, mid, scale_d, /*want_set=*/true);
    if (pr.feasible) {
      // Jump the lower bound to just below the witness density.
      Rational dens = set_objective(g, bonus, pr.witness);
      __int128 scaled = static_cast<__int128>(dens.num()) * scale_d;
      long long ceil_scaled = static_cast<long long>((scaled + dens.den() - 1) / dens.den());
      k_lo = std::max(mid, ceil_scaled - 1);
    } else {
      k_hi = mid;
    }
  }

  ProbeResult final_probe = probe_density(g, bonus, k_lo, scale_d, /*want_set=*/true);
  if (!final_probe.feasible || final_probe.witness.empty())
    throw std::logic_error("densest_subgraph: search invariant violated");
  Rational value = set_objective(g, bonus, final_probe.witness);
  return {final_probe.witness, value};
}

DenseDecomposition dense_decomposition(const Graph& g) {
  const std::size_t n = g.node_count();
  DenseDecomposition out;
  out.values.values.assign(n, 0.0);
  out.values.exact.assign(n, Rational(0, 1));
  out.values.is_exact = true;

  NodeSet remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  int index = 1;
  while (!remaining.empty()) {
    Graph h = induced_subgraph(g, remaining);
    std::vector<long long> bonus(remaining.size());
    bool any_bonus = false;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      bonus[i] = static_cast<long long>(g.degree(remaining[i])) -
                 static_cast<long long>(h.degree(static_cast<NodeId>(i)));
      any_bonus = any_bonus || bonus[i] > 0;
    }
    if (h.edge_count() == 0 && !any_bonus) {
      // Isolated remnant: final layer at level 0.
      out.layers.push_back({remaining, Rational(0, 1), index});
      break;
    }
    auto [local_set, level] = densest_subgraph(h, bonus);
    NodeSet members;
    members.reserve(local_set.size());
    for (NodeId i : local_set) members.push_back(remaining[static_cast<std::size_t>(i)]);
    for (NodeId v : members) {
      out.values.values[static_cast<std::size_t>(v)] = level.to_double();
      out.values.exact[static_cast<std::size_t>(v)] = level;
    }
    out.layers.push_back({members, level, index});
    ++index;

    NodeSet next;
    next.reserve(remaining.size() - members.size());
    std::set_difference(remaining.begin(), remaining.end(), members.begin(), members.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
  }
  return out;
}

Clustering dsc_flow_cluster(const Graph& g) {
  DenseDecomposition dec = dense_decomposition(g);
  std::vector<long long> group(g.node_count(), 0);
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    for (NodeId v : dec.layers[i].members) group[static_cast<std::size_t>(v)] = static_cast<long long>(i);
  }
  return components_within_groups(g, group);
}

FlowIterResult dsc_flow_iter_cluster(const Graph& g) {
  const std::size_t n = g.node_count();
  FlowIterResult out;
  out.values.values.assign(n, 0.0);
  out.values.exact.assign(n, Rational(0, 1));
  out.values.is_exact = true;

  std::vector<long long> group(n, -1);
  long long next_group = 0;

  NodeSet remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    Graph h = induced_subgraph(g, remaining);
    if (h.edge_count() == 0) {
      for (NodeId v : remaining) group[static_cast<std::size_t>(v)] = next_group++;
      break;
    }
    // Vertices already isolated can never join any densest subgraph of a
    // later round; settle them as singletons now.
    NodeSet extracted;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (h.degree(static_cast<NodeId>(i)) == 0) {
        group[static_cast<std::size_t>(remaining[i])] = next_group++;
        extracted.push_back(remaining[i]);
      }
    }
    std::vector<long long> zero_bonus(remaining.size(), 0);
    auto [local_set, level] = densest_subgraph(h, zero_bonus);
    long long community = next_group++;
    for (NodeId i : local_set) {
      NodeId v = remaining[static_cast<std::size_t>(i)];
      group[static_cast<std::size_t>(v)] = community;
      out.values.values[static_cast<std::size_t>(v)] = level.to_double();
      out.values.exact[static_cast<std::size_t>(v)] = level;
      extracted.push_back(v);
    }
    std::sort(extracted.begin(), extracted.end());
    NodeSet next;
    next.reserve(remaining.size() - extracted.size());
    std::set_difference(remaining.begin(), remaining.end(), extracted.begin(), extracted.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
  }
  // Extraction communities may be disconnected; present components.
  out.clustering = components_within_groups(g, group);
  return out;
}

}  // namespace dsc
