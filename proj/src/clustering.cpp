#include "dsc/clustering.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace dsc {

Clustering Clustering::singletons(std::size_t n) {
  std::vector<long long> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<long long>(i);
  return Clustering(std::move(labels));
}

std::vector<NodeSet> Clustering::clusters() const {
  std::unordered_map<long long, std::size_t> index;
  std::vector<NodeSet> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    auto [it, inserted] = index.emplace(labels_[v], out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(static_cast<NodeId>(v));
  }
  // Members are already ascending (nodes visited in id order); so is the
  // cluster order, keyed by first (= smallest) member.
  return out;
}

std::size_t Clustering::cluster_count() const {
  std::unordered_map<long long, char> seen;
  for (long long lab : labels_) seen.emplace(lab, 1);
  return seen.size();
}

std::size_t Clustering::cluster_size(NodeId v) const {
  long long lab = labels_[static_cast<std::size_t>(v)];
  std::size_t count = 0;
  for (long long other : labels_)
    if (other == lab) ++count;
  return count;
}

Clustering Clustering::canonicalized() const {
  std::unordered_map<long long, long long> remap;
  std::vector<long long> out(labels_.size());
  long long next = 0;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    auto [it, inserted] = remap.emplace(labels_[v], next);
    if (inserted) ++next;
    out[v] = it->second;
  }
  return Clustering(std::move(out));
}

bool same_partition(const Clustering& a, const Clustering& b) {
  if (a.node_count() != b.node_count()) return false;
  return a.canonicalized().labels() == b.canonicalized().labels();
}

Clustering components_within_groups(const Graph& g, const std::vector<long long>& group_of) {
  if (group_of.size() != g.node_count())
    throw std::invalid_argument("group vector does not cover the node universe");
  std::size_t n = g.node_count();
  std::vector<long long> out(n, -1);
  long long next = 0;
  std::vector<NodeId> stack;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (out[seed] != -1) continue;
    long long label = next++;
    out[seed] = label;
    stack.push_back(static_cast<NodeId>(seed));
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (out[wi] == -1 && group_of[wi] == group_of[static_cast<std::size_t>(u)]) {
          out[wi] = label;
          stack.push_back(w);
        }
      }
    }
  }
  return Clustering(std::move(out));
}

Clustering read_clustering_tsv(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open clustering file: " + path);
  std::vector<long long> labels(g.node_count(), -1);
  std::unordered_map<long long, long long> label_map;
  long long next_label = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected `<node_id>\\t<cluster_id>`");
    }
    long long ext = 0, raw_label = 0;
    auto r1 = std::from_chars(line.data(), line.data() + tab, ext);
    auto r2 = std::from_chars(line.data() + tab + 1, line.data() + line.size(), raw_label);
    if (r1.ec != std::errc() || r1.ptr != line.data() + tab || r2.ec != std::errc() ||
        r2.ptr != line.data() + line.size()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed line");
    }
    auto internal = g.internal_id(ext);
    if (!internal) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": node id " +
                               std::to_string(ext) + " is not in the graph");
    }
    auto [it, inserted] = label_map.emplace(raw_label, next_label);
    if (inserted) ++next_label;
    labels[static_cast<std::size_t>(*internal)] = it->second;
  }
  // Nodes missing from the file become singletons.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == -1) labels[v] = next_label++;
  }
  return Clustering(std::move(labels));
}

void write_clustering_tsv(const Graph& g, const Clustering& c, const std::string& path) {
  if (c.node_count() != g.node_count())
    throw std::invalid_argument("clustering does not cover the graph's node universe");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  Clustering canon = c.canonicalized();
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out << g.external_id(static_cast<NodeId>(v)) << '\t'
        << canon.label(static_cast<NodeId>(v)) << '\n';
  }
}

}  // namespace dsc
