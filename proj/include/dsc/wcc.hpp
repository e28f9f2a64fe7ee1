#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"

namespace dsc {

// A cluster of n nodes is well-connected when its minimum edge cut is
// strictly greater than bound(n); default bound is log10(n).
struct WellConnectednessThreshold {
  std::function<double(std::size_t)> bound;

  static WellConnectednessThreshold log10_rule() {
    return {[](std::size_t n) { return std::log10(static_cast<double>(n)); }};
  }
};

// Splits internally disconnected clusters into their connected components.
Clustering cc_treatment(const Graph& g, const Clustering& c);

// Recursively removes minimum edge cuts from clusters failing the
// well-connectedness test (cut <= bound(size)) until every non-singleton
// cluster passes. Only ever refines the input partition.
Clustering wcc_treatment(const Graph& g, const Clustering& c,
                         const WellConnectednessThreshold& thr =
                             WellConnectednessThreshold::log10_rule());

}  // namespace dsc
