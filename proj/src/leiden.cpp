#include "dsc/leiden.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dsc/rng.hpp"

namespace dsc {

namespace {

// Working graph for one aggregation level. Aggregate nodes carry the number
// of original nodes they contain, their internal edge weight as a self-loop,
// and their weighted degree (self-loops count twice).
struct LevelGraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> self_loop;
  std::vector<long long> size;
  std::vector<double> strength;
  double total_weight = 0.0;  // W: sum of edge weights plus self-loops
};

LevelGraph level_from_graph(const Graph& g) {
  LevelGraph lg;
  lg.n = static_cast<int>(g.node_count());
  lg.adj.resize(static_cast<std::size_t>(lg.n));
  lg.self_loop.assign(static_cast<std::size_t>(lg.n), 0.0);
  lg.size.assign(static_cast<std::size_t>(lg.n), 1);
  lg.strength.assign(static_cast<std::size_t>(lg.n), 0.0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    double w = g.edge_weight(e);
    lg.adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, w);
    lg.adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, w);
    lg.strength[static_cast<std::size_t>(ed.u)] += w;
    lg.strength[static_cast<std::size_t>(ed.v)] += w;
    lg.total_weight += w;
  }
  return lg;
}

struct CommunityState {
  std::vector<int> comm;           // community of each level node
  std::vector<long long> size;     // per community
  std::vector<double> strength;    // per community
  std::vector<int> empty_ids;      // reusable empty community ids

  explicit CommunityState(const LevelGraph& lg) {
    comm.resize(static_cast<std::size_t>(lg.n));
    std::iota(comm.begin(), comm.end(), 0);
    size.assign(static_cast<std::size_t>(lg.n), 0);
    strength.assign(static_cast<std::size_t>(lg.n), 0.0);
    for (int v = 0; v < lg.n; ++v) {
      size[static_cast<std::size_t>(v)] = lg.size[static_cast<std::size_t>(v)];
      strength[static_cast<std::size_t>(v)] = lg.strength[static_cast<std::size_t>(v)];
    }
  }

  void move(const LevelGraph& lg, int v, int to) {
    int from = comm[static_cast<std::size_t>(v)];
    if (from == to) return;
    size[static_cast<std::size_t>(from)] -= lg.size[static_cast<std::size_t>(v)];
    strength[static_cast<std::size_t>(from)] -= lg.strength[static_cast<std::size_t>(v)];
    if (size[static_cast<std::size_t>(from)] == 0) empty_ids.push_back(from);
    size[static_cast<std::size_t>(to)] += lg.size[static_cast<std::size_t>(v)];
    strength[static_cast<std::size_t>(to)] += lg.strength[static_cast<std::size_t>(v)];
    comm[static_cast<std::size_t>(v)] = to;
  }
};

// Gain of moving v from its community into `to`, given the weight of v's
// links into `to` (w_to) and into the rest of its current community (w_from).
double move_gain(const ObjectiveSpec& obj, const LevelGraph& lg, const CommunityState& cs,
                 int v, int to, double w_to, double w_from) {
  auto vi = static_cast<std::size_t>(v);
  int from = cs.comm[vi];
  double s_v = static_cast<double>(lg.size[vi]);
  double s_from = static_cast<double>(cs.size[static_cast<std::size_t>(from)]);
  double s_to = to >= 0 ? static_cast<double>(cs.size[static_cast<std::size_t>(to)]) : 0.0;
  if (obj.kind == ObjectiveSpec::Kind::cpm) {
    double gamma = obj.resolution;
    return (w_to - gamma * s_v * s_to) - (w_from - gamma * s_v * (s_from - s_v));
  }
  double w_total = lg.total_weight;
  if (w_total <= 0.0) return 0.0;
  double str_v = lg.strength[vi];
  double str_from = cs.strength[static_cast<std::size_t>(from)];
  double str_to = to >= 0 ? cs.strength[static_cast<std::size_t>(to)] : 0.0;
  return (w_to - w_from) / w_total +
         str_v * ((str_from - str_v) - str_to) / (2.0 * w_total * w_total);
}

constexpr double kGainEps = 1e-12;

// Queue-based local moving. Returns true if any node changed community.
bool move_nodes(const LevelGraph& lg, CommunityState& cs, const ObjectiveSpec& obj, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(lg.n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::deque<int> queue(order.begin(), order.end());
  std::vector<char> queued(static_cast<std::size_t>(lg.n), 1);

  std::vector<double> link(static_cast<std::size_t>(lg.n), 0.0);  // comm -> weight to v
  bool moved_any = false;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(v)] = 0;

    std::vector<int> touched;
    for (auto [u, w] : lg.adj[static_cast<std::size_t>(v)]) {
      int c = cs.comm[static_cast<std::size_t>(u)];
      if (link[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
      link[static_cast<std::size_t>(c)] += w;
    }
    int from = cs.comm[static_cast<std::size_t>(v)];
    double w_from = link[static_cast<std::size_t>(from)];

    int best = from;
    bool to_empty = false;
    double best_gain = 0.0;
    for (int c : touched) {
      if (c == from) continue;
      double gain = move_gain(obj, lg, cs, v, c, link[static_cast<std::size_t>(c)], w_from);
      if (gain > best_gain + kGainEps) {
        best_gain = gain;
        best = c;
        to_empty = false;
      }
    }
    // Splitting off into an empty community can also be the best move.
    if (cs.size[static_cast<std::size_t>(from)] > lg.size[static_cast<std::size_t>(v)] &&
        !cs.empty_ids.empty()) {
      double gain = move_gain(obj, lg, cs, v, -1, 0.0, w_from);
      if (gain > best_gain + kGainEps) {
        best_gain = gain;
        to_empty = true;
      }
    }
    for (int c : touched) link[static_cast<std::size_t>(c)] = 0.0;

    if (to_empty) {
      best = cs.empty_ids.back();
      cs.empty_ids.pop_back();
    }
    if (best != from) {
      cs.move(lg, v, best);
      moved_any = true;
      for (auto [u, w] : lg.adj[static_cast<std::size_t>(v)]) {
        (void)w;
        if (!queued[static_cast<std::size_t>(u)] && cs.comm[static_cast<std::size_t>(u)] != best) {
          queue.push_back(u);
          queued[static_cast<std::size_t>(u)] = 1;
        }
      }
    }
  }
  return moved_any;
}

// Refinement: inside each community of `partition`, grow connected refined
// groups by merging singleton nodes into adjacent refined communities with
// non-negative gain. Ties at the maximum gain are broken at random, which
// lets repeated passes explore different splits of a stuck community.
std::vector<int> refine_partition(const LevelGraph& lg, const CommunityState& partition,
                                  const ObjectiveSpec& obj, Rng& rng) {
  CommunityState refined(lg);
  std::vector<char> is_singleton(static_cast<std::size_t>(lg.n), 1);

  std::vector<int> order(static_cast<std::size_t>(lg.n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<double> link(static_cast<std::size_t>(lg.n), 0.0);
  std::vector<int> pool;
  for (int v : order) {
    if (!is_singleton[static_cast<std::size_t>(v)]) continue;
    int pv = partition.comm[static_cast<std::size_t>(v)];
    std::vector<int> touched;
    for (auto [u, w] : lg.adj[static_cast<std::size_t>(v)]) {
      if (partition.comm[static_cast<std::size_t>(u)] != pv) continue;
      int rc = refined.comm[static_cast<std::size_t>(u)];
      if (rc == refined.comm[static_cast<std::size_t>(v)]) continue;
      if (link[static_cast<std::size_t>(rc)] == 0.0) touched.push_back(rc);
      link[static_cast<std::size_t>(rc)] += w;
    }
    double best_gain = -kGainEps;  // zero-gain merges along real edges allowed
    pool.clear();
    for (int rc : touched) {
      double gain = move_gain(obj, lg, refined, v, rc, link[static_cast<std::size_t>(rc)], 0.0);
      if (gain > best_gain + kGainEps) {
        best_gain = gain;
        pool.clear();
      }
      if (gain >= best_gain - kGainEps) pool.push_back(rc);
    }
    for (int rc : touched) link[static_cast<std::size_t>(rc)] = 0.0;
    if (!pool.empty()) {
      int pick = pool[static_cast<std::size_t>(rng.below(pool.size()))];
      refined.move(lg, v, pick);
      is_singleton[static_cast<std::size_t>(v)] = 0;
      is_singleton[static_cast<std::size_t>(pick)] = 0;
    }
  }
  return refined.comm;
}

struct Aggregated {
  LevelGraph graph;
  std::vector<int> node_to_agg;  // level node -> aggregate node
  std::vector<int> agg_comm;     // aggregate node -> community (induced partition)
};

Aggregated aggregate(const LevelGraph& lg, const std::vector<int>& refined,
                     const CommunityState& partition) {
  Aggregated out;
  // Dense aggregate ids in order of smallest member.
  std::vector<int> agg_id(static_cast<std::size_t>(lg.n), -1);
  int next = 0;
  out.node_to_agg.resize(static_cast<std::size_t>(lg.n));
  for (int v = 0; v < lg.n; ++v) {
    int rc = refined[static_cast<std::size_t>(v)];
    if (agg_id[static_cast<std::size_t>(rc)] == -1) agg_id[static_cast<std::size_t>(rc)] = next++;
    out.node_to_agg[static_cast<std::size_t>(v)] = agg_id[static_cast<std::size_t>(rc)];
  }
  LevelGraph& ag = out.graph;
  ag.n = next;
  ag.adj.resize(static_cast<std::size_t>(next));
  ag.self_loop.assign(static_cast<std::size_t>(next), 0.0);
  ag.size.assign(static_cast<std::size_t>(next), 0);
  ag.strength.assign(static_cast<std::size_t>(next), 0.0);
  ag.total_weight = lg.total_weight;
  out.agg_comm.assign(static_cast<std::size_t>(next), 0);

  for (int v = 0; v < lg.n; ++v) {
    int a = out.node_to_agg[static_cast<std::size_t>(v)];
    ag.size[static_cast<std::size_t>(a)] += lg.size[static_cast<std::size_t>(v)];
    ag.self_loop[static_cast<std::size_t>(a)] += lg.self_loop[static_cast<std::size_t>(v)];
    out.agg_comm[static_cast<std::size_t>(a)] = partition.comm[static_cast<std::size_t>(v)];
  }
  std::unordered_map<long long, double> between;
  for (int v = 0; v < lg.n; ++v) {
    int a = out.node_to_agg[static_cast<std::size_t>(v)];
    for (auto [u, w] : lg.adj[static_cast<std::size_t>(v)]) {
      if (u <= v) continue;  // each level edge once
      int b = out.node_to_agg[static_cast<std::size_t>(u)];
      if (a == b) {
        ag.self_loop[static_cast<std::size_t>(a)] += w;
      } else {
        long long key = static_cast<long long>(std::min(a, b)) * ag.n + std::max(a, b);
        between[key] += w;
      }
    }
  }
  std::vector<std::pair<long long, double>> sorted_between(between.begin(), between.end());
  std::sort(sorted_between.begin(), sorted_between.end());
  for (auto [key, w] : sorted_between) {
    int a = static_cast<int>(key / ag.n);
    int b = static_cast<int>(key % ag.n);
    ag.adj[static_cast<std::size_t>(a)].emplace_back(b, w);
    ag.adj[static_cast<std::size_t>(b)].emplace_back(a, w);
  }
  for (int a = 0; a < ag.n; ++a) {
    double s = 2.0 * ag.self_loop[static_cast<std::size_t>(a)];
    for (auto [u, w] : ag.adj[static_cast<std::size_t>(a)]) {
      (void)u;
      s += w;
    }
    ag.strength[static_cast<std::size_t>(a)] = s;
  }
  return out;
}

}  // namespace

namespace {

// Merges level nodes that share a start label; deterministic merge order
// keeps the empty-id pool reproducible.
void seed_partition(const LevelGraph& level, CommunityState& partition,
                    const std::vector<long long>& start) {
  std::map<long long, std::vector<int>> groups;
  for (int v = 0; v < level.n; ++v) groups[start[static_cast<std::size_t>(v)]].push_back(v);
  for (auto& [label, members] : groups) {
    (void)label;
    for (std::size_t i = 1; i < members.size(); ++i)
      partition.move(level, members[i], partition.comm[static_cast<std::size_t>(members[0])]);
  }
}

// One full multilevel pass (move, refine, aggregate to exhaustion) starting
// from the given flat partition of the original graph.
std::vector<long long> leiden_pass(const Graph& g, const std::vector<long long>& start,
                                   const ObjectiveSpec& obj, Rng& rng) {
  LevelGraph level = level_from_graph(g);
  CommunityState partition(level);
  seed_partition(level, partition, start);
  std::vector<int> node_to_level(g.node_count());
  std::iota(node_to_level.begin(), node_to_level.end(), 0);

  while (true) {
    bool moved = move_nodes(level, partition, obj, rng);
    std::size_t community_count = 0;
    {
      std::vector<char> seen(static_cast<std::size_t>(level.n), 0);
      for (int v = 0; v < level.n; ++v) {
        int c = partition.comm[static_cast<std::size_t>(v)];
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          ++community_count;
        }
      }
    }
    if (community_count == static_cast<std::size_t>(level.n)) break;  // all singletons

    std::vector<int> refined = refine_partition(level, partition, obj, rng);
    Aggregated agg = aggregate(level, refined, partition);
    bool shrunk = agg.graph.n < level.n;
    for (std::size_t v = 0; v < node_to_level.size(); ++v)
      node_to_level[v] = agg.node_to_agg[static_cast<std::size_t>(node_to_level[v])];
    std::vector<long long> induced(static_cast<std::size_t>(agg.graph.n));
    for (int a = 0; a < agg.graph.n; ++a)
      induced[static_cast<std::size_t>(a)] = agg.agg_comm[static_cast<std::size_t>(a)];
    level = std::move(agg.graph);
    partition = CommunityState(level);
    seed_partition(level, partition, induced);
    if (!moved && !shrunk) break;
  }

  std::vector<long long> flat(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v)
    flat[v] = partition.comm[static_cast<std::size_t>(node_to_level[v])];
  return flat;
}

}  // namespace

Clustering leiden_cluster(const Graph& g, const ObjectiveSpec& obj, std::uint64_t seed,
                          int iterations) {
  if (iterations < 1) throw std::invalid_argument("leiden_cluster: iterations must be >= 1");
  if (obj.kind == ObjectiveSpec::Kind::cpm && obj.resolution <= 0.0)
    throw std::invalid_argument("leiden_cluster: cpm resolution must be positive");

  Rng rng(seed);
  std::vector<long long> flat(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) flat[v] = static_cast<long long>(v);

  // Repeated passes restart from the flat partition at full resolution; a
  // pass may discover nothing only because of how refinement split a stuck
  // community, so convergence is declared after two stagnant passes.
  int stagnant = 0;
  for (int iter = 0; iter < iterations; ++iter) {
    std::vector<long long> next = leiden_pass(g, flat, obj, rng);
    bool changed = !same_partition(Clustering(flat), Clustering(next));
    flat = std::move(next);
    if (changed) {
      stagnant = 0;
    } else if (++stagnant >= 2) {
      break;
    }
  }
  // Guarantee connected output clusters.
  return components_within_groups(g, flat);
}

double quality(const Graph& g, const Clustering& c, const ObjectiveSpec& obj) {
  if (c.node_count() != g.node_count())
    throw std::invalid_argument("quality: clustering does not cover the graph");
  Clustering canon = c.canonicalized();
  std::size_t k = canon.cluster_count();
  std::vector<double> w_in(k, 0.0), strength(k, 0.0);
  std::vector<long long> size(k, 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    auto lab = static_cast<std::size_t>(canon.label(static_cast<NodeId>(v)));
    ++size[lab];
    strength[lab] += g.strength(static_cast<NodeId>(v));
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    if (canon.label(ed.u) == canon.label(ed.v))
      w_in[static_cast<std::size_t>(canon.label(ed.u))] += g.edge_weight(e);
  }
  if (obj.kind == ObjectiveSpec::Kind::cpm) {
    double gamma = obj.resolution;
    double q = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double nc = static_cast<double>(size[i]);
      q += w_in[i] - gamma * nc * (nc - 1.0) / 2.0;
    }
    return q;
  }
  double w_total = g.total_edge_weight();
  if (w_total <= 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double frac = strength[i] / (2.0 * w_total);
    q += w_in[i] / w_total - frac * frac;
  }
  return q;
}

}  // namespace dsc
