#include "dsc/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace dsc {

FlowNetwork::FlowNetwork(int node_count) {
  if (node_count < 2) throw std::invalid_argument("FlowNetwork needs >= 2 nodes");
  first_arc_.resize(static_cast<std::size_t>(node_count));
}

void FlowNetwork::add_arc(int from, int to, long long capacity) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count())
    throw std::invalid_argument("add_arc: endpoint out of range");
  if (capacity < 0) throw std::invalid_argument("add_arc: negative capacity");
  first_arc_[static_cast<std::size_t>(from)].push_back(static_cast<int>(head_.size()));
  head_.push_back(to);
  cap_.push_back(capacity);
  first_arc_[static_cast<std::size_t>(to)].push_back(static_cast<int>(head_.size()));
  head_.push_back(from);
  cap_.push_back(0);
}

// Highest-label discharge loop shared by both phases. Labels approximate the
// residual distance to `sink`; `pinned` (the opposite terminal) sits at label
// n and never activates. Runs until no non-terminal node holds excess below
// label n. Uses the gap heuristic and periodic global relabeling.
void FlowNetwork::discharge_toward(int pinned, int sink, std::vector<long long>& res,
                                   std::vector<__int128>& excess) const {
  const int n = node_count();

  std::vector<int> dist(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> cur(static_cast<std::size_t>(n), 0);
  std::vector<int> label_count(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::vector<int>> active(static_cast<std::size_t>(2 * n));
  int highest = 0;

  auto push_active = [&](int v) {
    if (v != pinned && v != sink && excess[static_cast<std::size_t>(v)] > 0 &&
        dist[static_cast<std::size_t>(v)] < n) {
      active[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);
      highest = std::max(highest, dist[static_cast<std::size_t>(v)]);
    }
  };

  // Exact distance-to-sink labels over the residual graph via reverse BFS;
  // unreachable nodes and the pinned terminal get label n.
  auto global_relabel = [&]() {
    std::fill(dist.begin(), dist.end(), n);
    std::fill(label_count.begin(), label_count.end(), 0);
    for (auto& bucket : active) bucket.clear();
    dist[static_cast<std::size_t>(sink)] = 0;
    std::queue<int> bfs;
    bfs.push(sink);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int a : first_arc_[static_cast<std::size_t>(v)]) {
        // residual arc (head_[a] -> v) exists iff res[a^1] > 0
        int u = head_[static_cast<std::size_t>(a)];
        if (dist[static_cast<std::size_t>(u)] == n && res[static_cast<std::size_t>(a ^ 1)] > 0 &&
            u != pinned) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          bfs.push(u);
        }
      }
    }
    dist[static_cast<std::size_t>(pinned)] = n;
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] < n)
        ++label_count[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])];
      cur[static_cast<std::size_t>(v)] = 0;
    }
    highest = 0;
    for (int v = 0; v < n; ++v) push_active(v);
  };

  global_relabel();

  const std::size_t relabel_budget = std::max<std::size_t>(head_.size() / 2, 16);
  std::size_t relabels_since_update = 0;

  while (highest >= 0) {
    if (active[static_cast<std::size_t>(highest)].empty()) {
      if (highest == 0) break;
      --highest;
      continue;
    }
    int v = active[static_cast<std::size_t>(highest)].back();
    active[static_cast<std::size_t>(highest)].pop_back();
    if (v == pinned || v == sink || excess[static_cast<std::size_t>(v)] <= 0 ||
        dist[static_cast<std::size_t>(v)] != highest || dist[static_cast<std::size_t>(v)] >= n)
      continue;

    while (excess[static_cast<std::size_t>(v)] > 0 && dist[static_cast<std::size_t>(v)] < n) {
      if (cur[static_cast<std::size_t>(v)] == first_arc_[static_cast<std::size_t>(v)].size()) {
        // relabel
        int dv = dist[static_cast<std::size_t>(v)];
        int min_d = 2 * n;
        for (int a : first_arc_[static_cast<std::size_t>(v)]) {
          if (res[static_cast<std::size_t>(a)] > 0)
            min_d = std::min(min_d,
                             dist[static_cast<std::size_t>(head_[static_cast<std::size_t>(a)])]);
        }
        --label_count[static_cast<std::size_t>(dv)];
        if (label_count[static_cast<std::size_t>(dv)] == 0 && dv < n) {
          // gap: everything strictly above dv (below n) is cut off from sink
          for (int u = 0; u < n; ++u) {
            int du = dist[static_cast<std::size_t>(u)];
            if (du > dv && du < n) {
              --label_count[static_cast<std::size_t>(du)];
              dist[static_cast<std::size_t>(u)] = n;
            }
          }
          dist[static_cast<std::size_t>(v)] = n;
          break;
        }
        dist[static_cast<std::size_t>(v)] = std::min(min_d + 1, n);
        if (dist[static_cast<std::size_t>(v)] < n)
          ++label_count[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])];
        cur[static_cast<std::size_t>(v)] = 0;
        ++relabels_since_update;
        if (relabels_since_update >= relabel_budget) {
          relabels_since_update = 0;
          global_relabel();
          break;
        }
        continue;
      }
      int a = first_arc_[static_cast<std::size_t>(v)][cur[static_cast<std::size_t>(v)]];
      int w = head_[static_cast<std::size_t>(a)];
      if (res[static_cast<std::size_t>(a)] > 0 &&
          dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(w)] + 1) {
        long long delta = static_cast<long long>(
            std::min<__int128>(excess[static_cast<std::size_t>(v)],
                               static_cast<__int128>(res[static_cast<std::size_t>(a)])));
        res[static_cast<std::size_t>(a)] -= delta;
        res[static_cast<std::size_t>(a ^ 1)] += delta;
        excess[static_cast<std::size_t>(v)] -= delta;
        bool was_inactive = excess[static_cast<std::size_t>(w)] == 0;
        excess[static_cast<std::size_t>(w)] += delta;
        if (was_inactive) push_active(w);
      } else {
        ++cur[static_cast<std::size_t>(v)];
      }
    }
    push_active(v);
  }
}

std::vector<char> FlowNetwork::residual_reach(int start, const std::vector<long long>& res,
                                              bool reverse) const {
  std::vector<char> reach(static_cast<std::size_t>(node_count()), 0);
  reach[static_cast<std::size_t>(start)] = 1;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : first_arc_[static_cast<std::size_t>(v)]) {
      int u = head_[static_cast<std::size_t>(a)];
      // forward: residual arc (v -> u) is res[a]; reverse walk follows
      // residual arcs (u -> v), i.e. res[a^1]
      long long r = reverse ? res[static_cast<std::size_t>(a ^ 1)] : res[static_cast<std::size_t>(a)];
      if (!reach[static_cast<std::size_t>(u)] && r > 0) {
        reach[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  return reach;
}

CutResult FlowNetwork::max_flow(int source, int sink, CutSide side) {
  if (source < 0 || source >= node_count() || sink < 0 || sink >= node_count())
    throw std::invalid_argument("max_flow: terminal out of range");
  if (source == sink) throw std::invalid_argument("max_flow: source equals sink");

  const int n = node_count();
  std::vector<long long> res = cap_;
  std::vector<__int128> excess(static_cast<std::size_t>(n), 0);

  // Phase 1: saturate the source arcs, then raise a maximum preflow.
  for (int a : first_arc_[static_cast<std::size_t>(source)]) {
    if ((a & 1) == 0 && res[static_cast<std::size_t>(a)] > 0) {
      long long delta = res[static_cast<std::size_t>(a)];
      res[static_cast<std::size_t>(a)] = 0;
      res[static_cast<std::size_t>(a ^ 1)] += delta;
      excess[static_cast<std::size_t>(head_[static_cast<std::size_t>(a)])] += delta;
    }
  }
  discharge_toward(source, sink, res, excess);
  __int128 value = excess[static_cast<std::size_t>(sink)];

  // Phase 2: return trapped excess to the source, turning the preflow into a
  // feasible flow (conservation then holds at every non-terminal).
  discharge_toward(sink, source, res, excess);
  if (excess[static_cast<std::size_t>(sink)] != value)
    throw std::logic_error("max_flow: phase 2 changed the flow value");
  for (int v = 0; v < n; ++v) {
    if (v != source && v != sink && excess[static_cast<std::size_t>(v)] != 0)
      throw std::logic_error("max_flow: residual excess after phase 2");
  }

  CutResult result;
  result.max_flow_value = static_cast<long long>(value);

  std::vector<char> on_source_side;
  if (side == CutSide::maximal_source) {
    // union of all min-cut source sides: nodes that cannot reach t
    std::vector<char> reach = residual_reach(sink, res, /*reverse=*/true);
    on_source_side.assign(reach.size(), 0);
    for (std::size_t v = 0; v < reach.size(); ++v) on_source_side[v] = !reach[v];
  } else {
    // intersection of all min-cut source sides: nodes reachable from s
    on_source_side = residual_reach(source, res, /*reverse=*/false);
  }

  for (int v = 0; v < n; ++v) {
    if (v == source || v == sink) continue;
    if (on_source_side[static_cast<std::size_t>(v)])
      result.source_side.push_back(v);
    else
      result.sink_side.push_back(v);
  }

  result.arc_flows.reserve(head_.size() / 2);
  for (std::size_t a = 0; a + 1 < head_.size(); a += 2) {
    result.arc_flows.push_back({head_[a + 1], head_[a], cap_[a], cap_[a] - res[a]});
  }
  return result;
}

GlobalCut min_cut_global(const Graph& g) {
  std::size_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("min_cut_global: need >= 2 nodes");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("min_cut_global: graph must be connected");

  // Stoer-Wagner over contracted supernodes. Weight maps are merged
  // smaller-into-larger; the maximum-adjacency search breaks key ties by
  // the smallest supernode representative, which pins the output.
  std::vector<std::unordered_map<int, double>> w(n);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    double we = g.edge_weight(e);
    w[static_cast<std::size_t>(ed.u)][ed.v] += we;
    w[static_cast<std::size_t>(ed.v)][ed.u] += we;
  }
  std::vector<NodeSet> group(n);
  for (std::size_t v = 0; v < n; ++v) group[v] = {static_cast<NodeId>(v)};
  std::vector<char> alive(n, 1);
  std::size_t alive_count = n;

  double best_cut = std::numeric_limits<double>::infinity();
  NodeSet best_side;

  while (alive_count > 1) {
    int start = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v]) {
        start = static_cast<int>(v);
        break;
      }
    }
    std::vector<char> added(n, 0);
    std::vector<double> key(n, 0.0);
    added[static_cast<std::size_t>(start)] = 1;
    for (auto& [to, wt] : w[static_cast<std::size_t>(start)]) key[static_cast<std::size_t>(to)] += wt;
    int prev = start, last = start;
    double last_key = 0.0;
    for (std::size_t step = 1; step < alive_count; ++step) {
      int pick = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v] || added[v]) continue;
        if (pick == -1 || key[v] > key[static_cast<std::size_t>(pick)]) pick = static_cast<int>(v);
      }
      added[static_cast<std::size_t>(pick)] = 1;
      prev = last;
      last = pick;
      last_key = key[static_cast<std::size_t>(pick)];
      for (auto& [to, wt] : w[static_cast<std::size_t>(pick)]) {
        if (alive[static_cast<std::size_t>(to)] && !added[static_cast<std::size_t>(to)])
          key[static_cast<std::size_t>(to)] += wt;
      }
    }
    // cut-of-the-phase: last supernode vs the rest
    if (last_key < best_cut) {
      best_cut = last_key;
      best_side = group[static_cast<std::size_t>(last)];
    }
    // contract last into prev
    auto li = static_cast<std::size_t>(last);
    auto pi = static_cast<std::size_t>(prev);
    for (auto& [to, wt] : w[li]) {
      if (to == prev) continue;
      w[pi][to] += wt;
      w[static_cast<std::size_t>(to)][prev] += wt;
      w[static_cast<std::size_t>(to)].erase(last);
    }
    w[pi].erase(last);
    for (NodeId member : group[li]) group[pi].push_back(member);
    w[li].clear();
    group[li].clear();
    alive[li] = 0;
    --alive_count;
  }

  GlobalCut out;
  out.cut_weight = best_cut;
  std::sort(best_side.begin(), best_side.end());
  std::vector<char> in_a(n, 0);
  for (NodeId v : best_side) in_a[static_cast<std::size_t>(v)] = 1;
  NodeSet other;
  for (std::size_t v = 0; v < n; ++v)
    if (!in_a[v]) other.push_back(static_cast<NodeId>(v));
  // side_a holds the side containing node 0
  if (!best_side.empty() && best_side.front() == 0) {
    out.side_a = std::move(best_side);
    out.side_b = std::move(other);
  } else {
    out.side_a = std::move(other);
    out.side_b = std::move(best_side);
  }
  return out;
}

}  // namespace dsc
