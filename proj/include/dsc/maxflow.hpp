#pragma once

#include <cstdint>
#include <vector>

#include "dsc/graph.hpp"

namespace dsc {

enum class CutSide {
  minimal_source,  // intersection of all min-cut source sides
  maximal_source,  // union of all min-cut source sides
};

struct ArcFlow {
  int from, to;
  long long capacity;
  long long flow;  // in [0, capacity]
};

struct CutResult {
  long long max_flow_value = 0;
  NodeSet source_side;  // excluding s
  NodeSet sink_side;    // excluding t
  std::vector<ArcFlow> arc_flows;  // one per added arc, insertion order
};

// Directed flow network with integer capacities. Callers that work with
// rational capacities pre-scale them to a common denominator so every cut
// comparison is exact.
//
// The solver is highest-label push-relabel with the gap heuristic and
// periodic global relabeling (after every m relabels): phase 1 raises a
// maximum preflow, phase 2 drains trapped excess back to the source so the
// reported arc flows satisfy conservation.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  // Adds a directed arc and its zero-capacity residual twin.
  void add_arc(int from, int to, long long capacity);

  int node_count() const { return static_cast<int>(first_arc_.size()); }
  std::size_t arc_count() const { return head_.size() / 2; }

  // Repeatable: each call solves from the original capacities.
  CutResult max_flow(int source, int sink, CutSide side = CutSide::minimal_source);

 private:
  std::vector<int> head_;         // arc target; twin of arc a is a^1
  std::vector<long long> cap_;    // original capacities
  std::vector<std::vector<int>> first_arc_;  // arc ids per node

  void discharge_toward(int pinned, int sink, std::vector<long long>& res,
                        std::vector<__int128>& excess) const;
  std::vector<char> residual_reach(int start, const std::vector<long long>& res,
                                   bool reverse) const;
};

struct GlobalCut {
  double cut_weight = 0.0;
  NodeSet side_a;  // side containing the smaller smallest id
  NodeSet side_b;
};

// Global minimum edge cut (Stoer-Wagner, deterministic tie-breaking by
// smallest id). Requires a connected graph with >= 2 nodes. Honors edge
// weights when present.
GlobalCut min_cut_global(const Graph& g);

}  // namespace dsc
