#include "dsc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dsc {

namespace {

// Splits a line into tab-separated fields. Bare spaces are not accepted as
// separators; the formats here are strictly TSV.
std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

long long parse_id(std::string_view field, const std::string& path, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                             ": expected a non-negative integer node id, got '" +
                             std::string(field) + "'");
  }
  return value;
}

double parse_weight(std::string_view field, const std::string& path, std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    double w = std::stod(std::string(field), &consumed);
    if (consumed != field.size() || w < 0.0) throw std::invalid_argument("bad weight");
    return w;
  } catch (const std::exception&) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                             ": expected a non-negative weight, got '" + std::string(field) + "'");
  }
}

}  // namespace

Graph::Graph(const std::vector<std::pair<ExternalId, ExternalId>>& raw_edges,
             const std::vector<ExternalId>& universe,
             const std::vector<double>* weights) {
  weighted_ = weights != nullptr;
  auto intern = [&](ExternalId ext) -> NodeId {
    auto it = to_internal_.find(ext);
    if (it != to_internal_.end()) return it->second;
    NodeId id = static_cast<NodeId>(external_.size());
    external_.push_back(ext);
    to_internal_.emplace(ext, id);
    return id;
  };
  for (ExternalId ext : universe) intern(ext);

  struct Raw {
    NodeId u, v;
    double w;
  };
  std::vector<Raw> raws;
  raws.reserve(raw_edges.size());
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    NodeId a = intern(raw_edges[i].first);
    NodeId b = intern(raw_edges[i].second);
    if (a == b) {
      ++self_loops_dropped_;
      continue;
    }
    if (a > b) std::swap(a, b);
    raws.push_back({a, b, weighted_ ? (*weights)[i] : 1.0});
  }
  // Collapse parallel edges, keeping the first weight seen. stable_sort
  // preserves input order within each (u, v) group.
  std::stable_sort(raws.begin(), raws.end(), [](const Raw& x, const Raw& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  for (std::size_t i = 0; i < raws.size(); ++i) {
    if (!edges_.empty() && edges_.back().u == raws[i].u && edges_.back().v == raws[i].v) {
      ++duplicates_collapsed_;
      continue;
    }
    edges_.push_back({raws[i].u, raws[i].v});
    if (weighted_) weights_.push_back(raws[i].w);
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  std::size_t n = external_.size();
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
  adj_.assign(offsets_[n], 0);
  adj_w_.assign(offsets_[n], 1.0);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    double w = weighted_ ? weights_[e] : 1.0;
    adj_[cursor[static_cast<std::size_t>(edges_[e].u)]] = edges_[e].v;
    adj_w_[cursor[static_cast<std::size_t>(edges_[e].u)]++] = w;
    adj_[cursor[static_cast<std::size_t>(edges_[e].v)]] = edges_[e].u;
    adj_w_[cursor[static_cast<std::size_t>(edges_[e].v)]++] = w;
  }
  // Neighbor lists come out sorted because edges_ is sorted by (u, v) and
  // both endpoints are appended in that order; sort anyway for safety on
  // the v-side lists.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t lo = offsets_[v], hi = offsets_[v + 1];
    std::vector<std::pair<NodeId, double>> tmp;
    tmp.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) tmp.emplace_back(adj_[i], adj_w_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t i = lo; i < hi; ++i) {
      adj_[i] = tmp[i - lo].first;
      adj_w_[i] = tmp[i - lo].second;
    }
  }
}

Graph Graph::load_edgelist(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edgelist file: " + path);
  std::vector<std::pair<ExternalId, ExternalId>> raw;
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    std::size_t expected = weighted ? 3 : 2;
    if (fields.size() != expected) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(expected) + " tab-separated fields, got " +
                               std::to_string(fields.size()));
    }
    ExternalId a = parse_id(fields[0], path, line_no);
    ExternalId b = parse_id(fields[1], path, line_no);
    raw.emplace_back(a, b);
    if (weighted) weights.push_back(parse_weight(fields[2], path, line_no));
  }
  return Graph(raw, {}, weighted ? &weights : nullptr);
}

void Graph::write_edgelist(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out << external_[static_cast<std::size_t>(edges_[e].u)] << '\t'
        << external_[static_cast<std::size_t>(edges_[e].v)];
    if (weighted_) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6g", weights_[e]);
      out << '\t' << buf;
    }
    out << '\n';
  }
}

double Graph::total_edge_weight() const {
  if (!weighted_) return static_cast<double>(edges_.size());
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double Graph::strength(NodeId u) const {
  auto ws = neighbor_weights(u);
  return std::accumulate(ws.begin(), ws.end(), 0.0);
}

std::optional<NodeId> Graph::internal_id(ExternalId ext) const {
  auto it = to_internal_.find(ext);
  if (it == to_internal_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto ns = neighbors(u);
  return std::binary_search(ns.begin(), ns.end(), v);
}

Graph induced_subgraph(const Graph& g, const NodeSet& members) {
  if (members.empty()) throw std::invalid_argument("induced_subgraph: empty node set");
  std::vector<char> in_set(g.node_count(), 0);
  for (NodeId v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.node_count())
      throw std::invalid_argument("induced_subgraph: node id out of range");
    in_set[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<ExternalId> universe;
  universe.reserve(members.size());
  for (NodeId v : members) universe.push_back(g.external_id(v));
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  std::vector<double> weights;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    if (in_set[static_cast<std::size_t>(ed.u)] && in_set[static_cast<std::size_t>(ed.v)]) {
      edges.emplace_back(g.external_id(ed.u), g.external_id(ed.v));
      weights.push_back(g.edge_weight(e));
    }
  }
  return Graph(edges, universe, g.is_weighted() ? &weights : nullptr);
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::size_t n = g.node_count();
  std::vector<char> visited(n, 0);
  std::vector<NodeSet> components;
  std::vector<NodeId> stack;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (visited[seed]) continue;
    NodeSet comp;
    stack.push_back(static_cast<NodeId>(seed));
    visited[seed] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<int> core_numbers(const Graph& g) {
  // Peeling in bucket order (Batagelj-Zaversnik).
  std::size_t n = g.node_count();
  std::vector<int> deg(n), core(n, 0);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g.degree(static_cast<NodeId>(v)));
    max_deg = std::max(max_deg, g.degree(static_cast<NodeId>(v)));
  }
  std::vector<std::vector<NodeId>> buckets(max_deg + 1);
  for (std::size_t v = 0; v < n; ++v) buckets[static_cast<std::size_t>(deg[v])].push_back(static_cast<NodeId>(v));
  std::vector<char> removed(n, 0);
  int current = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    // Buckets gain entries below d as neighbors get peeled; re-scan from the
    // lowest non-empty bucket each time one empties.
    for (std::size_t i = 0; i < buckets[d].size(); ++i) {
      NodeId v = buckets[d][i];
      if (removed[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] != static_cast<int>(d)) continue;
      current = std::max(current, static_cast<int>(d));
      core[static_cast<std::size_t>(v)] = current;
      removed[static_cast<std::size_t>(v)] = 1;
      for (NodeId w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (!removed[wi] && deg[wi] > static_cast<int>(d)) {
          --deg[wi];
          buckets[static_cast<std::size_t>(deg[wi])].push_back(w);
        }
      }
    }
  }
  return core;
}

NodeSet k_core(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k_core: k must be non-negative");
  std::vector<int> core = core_numbers(g);
  NodeSet result;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (core[v] >= k) result.push_back(static_cast<NodeId>(v));
  }
  return result;
}

}  // namespace dsc
