#include "dsc/fista.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace dsc {

namespace {

// Loads implied by an orientation vector: x[e] of edge e goes to the
// smaller endpoint, 1 - x[e] to the larger.
std::vector<double> loads_from(const Graph& g, const std::vector<double>& x) {
  std::vector<double> b(g.node_count(), 0.0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    b[static_cast<std::size_t>(ed.u)] += x[e];
    b[static_cast<std::size_t>(ed.v)] += 1.0 - x[e];
  }
  return b;
}

}  // namespace

EdgeLoadState fista_state(const Graph& g, int n_iters) {
  if (n_iters < 1) throw std::invalid_argument("fista_state: n_iters must be >= 1");
  const std::size_t m = g.edge_count();
  EdgeLoadState s;
  s.x.assign(m, 0.5);
  s.x_prev = s.x;
  s.y = s.x;
  s.t = 1.0;
  if (m == 0) {
    s.load.assign(g.node_count(), 0.0);
    s.iterations_run = n_iters;
    return s;
  }

  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    max_deg = std::max(max_deg, g.degree(static_cast<NodeId>(v)));
  const double step = 1.0 / (2.0 * static_cast<double>(max_deg));

  std::vector<double> x_new(m);
  for (int iter = 0; iter < n_iters; ++iter) {
    std::vector<double> b = loads_from(g, s.y);
    for (std::size_t e = 0; e < m; ++e) {
      const Edge& ed = g.edges()[e];
      // Gradient step on the (x_uv, x_vu) pair followed by projection onto
      // its simplex collapses to this one-variable update: the projection
      // keeps only the antisymmetric half of the (2b_u, 2b_v) gradient.
      double grad = b[static_cast<std::size_t>(ed.u)] - b[static_cast<std::size_t>(ed.v)];
      x_new[e] = std::clamp(s.y[e] - step * grad, 0.0, 1.0);
    }
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * s.t * s.t));
    double momentum = (s.t - 1.0) / t_next;
    for (std::size_t e = 0; e < m; ++e) s.y[e] = x_new[e] + momentum * (x_new[e] - s.x[e]);
    s.x_prev = s.x;
    s.x = x_new;
    s.t = t_next;
  }
  s.load = loads_from(g, s.x);
  s.iterations_run = n_iters;
  return s;
}

VertexValues fista_solve(const Graph& g, int n_iters) {
  EdgeLoadState s = fista_state(g, n_iters);
  VertexValues out;
  out.values = std::move(s.load);
  out.is_exact = false;
  return out;
}

Clustering dsc_fista_int_cluster(const Graph& g, int n_iters) {
  VertexValues vals = fista_solve(g, n_iters);
  std::vector<long long> group(g.node_count());
  for (std::size_t v = 0; v < group.size(); ++v) {
    group[v] = static_cast<long long>(std::floor(vals.values[v] + 0.5));  // half-up
  }
  return components_within_groups(g, group);
}

std::pair<NodeSet, double> fractional_peel(const Graph& g, const EdgeLoadState& state) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("fractional_peel: graph has no edges");
  if (state.x.size() != m || state.load.size() != n)
    throw std::invalid_argument("fractional_peel: state does not match graph");

  // incident edge ids per node
  std::vector<std::vector<std::pair<std::size_t, NodeId>>> incident(n);
  for (std::size_t e = 0; e < m; ++e) {
    incident[static_cast<std::size_t>(g.edges()[e].u)].emplace_back(e, g.edges()[e].v);
    incident[static_cast<std::size_t>(g.edges()[e].v)].emplace_back(e, g.edges()[e].u);
  }

  std::vector<double> load = state.load;
  std::vector<char> alive(n, 1);
  // min-heap on (load, id); stale entries are skipped by comparing the
  // pushed load against the current one bit-for-bit
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t v = 0; v < n; ++v) heap.emplace(load[v], static_cast<NodeId>(v));

  long long rem_edges = static_cast<long long>(m);
  long long rem_nodes = static_cast<long long>(n);
  long long best_num = rem_edges, best_den = rem_nodes;
  std::size_t best_removals = 0;

  std::vector<NodeId> removal_order;
  removal_order.reserve(n);
  while (rem_nodes > 0) {
    Entry top = heap.top();
    heap.pop();
    NodeId u = top.second;
    auto ui = static_cast<std::size_t>(u);
    if (!alive[ui] || top.first != load[ui]) continue;
    alive[ui] = 0;
    removal_order.push_back(u);
    --rem_nodes;
    for (auto [e, v] : incident[ui]) {
      auto vi = static_cast<std::size_t>(v);
      if (!alive[vi]) continue;
      double transfer = (g.edges()[e].u == u) ? state.x[e] : 1.0 - state.x[e];
      load[vi] += transfer;
      --rem_edges;
      heap.emplace(load[vi], v);
    }
    // Strict improvement keeps the earliest (largest) best suffix.
    if (rem_nodes > 0 &&
        static_cast<__int128>(rem_edges) * best_den > static_cast<__int128>(best_num) * rem_nodes) {
      best_num = rem_edges;
      best_den = rem_nodes;
      best_removals = removal_order.size();
    }
  }

  std::vector<char> removed(n, 0);
  for (std::size_t i = 0; i < best_removals; ++i)
    removed[static_cast<std::size_t>(removal_order[i])] = 1;
  NodeSet set;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v]) set.push_back(static_cast<NodeId>(v));
  return {set, static_cast<double>(best_num) / static_cast<double>(best_den)};
}

FistaIterResult dsc_fista_iter_cluster(const Graph& g, int n_iters) {
  if (n_iters < 1) throw std::invalid_argument("dsc_fista_iter_cluster: n_iters must be >= 1");
  const std::size_t n = g.node_count();
  FistaIterResult out;
  out.extraction_density.assign(n, 0.0);

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
    // Vertices isolated by earlier removals become singletons before the
    // peel so they cannot ride along inside an extraction suffix.
    NodeSet extracted, active;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (h.degree(static_cast<NodeId>(i)) == 0) {
        group[static_cast<std::size_t>(remaining[i])] = next_group++;
        extracted.push_back(remaining[i]);
      } else {
        active.push_back(remaining[i]);
      }
    }
    if (!extracted.empty()) h = induced_subgraph(g, active);
    EdgeLoadState state = fista_state(h, n_iters);
    auto [local_set, density] = fractional_peel(h, state);
    long long community = next_group++;
    for (NodeId i : local_set) {
      NodeId v = active[static_cast<std::size_t>(i)];
      group[static_cast<std::size_t>(v)] = community;
      out.extraction_density[static_cast<std::size_t>(v)] = density;
      extracted.push_back(v);
    }
    std::sort(extracted.begin(), extracted.end());
    NodeSet next;
    next.reserve(remaining.size() - extracted.size());
    std::set_difference(remaining.begin(), remaining.end(), extracted.begin(), extracted.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
  }
  out.clustering = components_within_groups(g, group);
  return out;
}

}  // namespace dsc
