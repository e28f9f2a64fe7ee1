#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsc/clustering.hpp"
#include "dsc/graph.hpp"

namespace dsc {

struct PipelineConfig {
  std::string edgelist_path;
  std::string output_directory;
  double threshold = 0.5;
  bool weighted_merge = false;   // cluster the weighted merged network
  double cpm_resolution = 0.01;
  std::uint64_t leiden_seed = 0;
  std::string stage2_clustering;  // optional externally produced clustering TSV
  std::string log_path;           // defaults to <output_directory>/pipeline_log.txt
  std::string timing_path;        // defaults to <output_directory>/stage_timing.tsv
};

struct StageTiming {
  struct Stage {
    std::string name;
    double seconds = 0.0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
  };
  std::vector<Stage> stages;         // reported in order 1..4
  long long peak_memory_bytes = -1;  // best effort, -1 when unavailable
};

struct PipelineResult {
  Graph network;                // the loaded input network
  Clustering final_clustering;  // over `network`'s node universe
  StageTiming timing;
};

// The four-stage pipeline: (1) iterative flow extraction, (2) Leiden-Mod,
// (3) agreement-weighted edge filtering at the threshold, (4) Leiden-CPM on
// the merged network plus well-connectedness post-processing. Intermediate
// artifacts are persisted into the output directory.
PipelineResult run_pipeline(const PipelineConfig& cfg);

struct MethodReportRow {
  std::string method;
  double ami = 0.0, ari = 0.0, nmi = 0.0;
  double precision = 0.0, recall = 0.0, fpr = 0.0;
  double coverage = 0.0;
  double seconds = 0.0;
};

// Runs each named method against the ground truth and reports the metric
// table. Known names: dsc-flow, dsc-flow-iter, dsc-fista-int,
// dsc-fista-iter, ikc, leiden-mod, leiden-cpm, ensemble.
std::vector<MethodReportRow> compare_methods(const Graph& g, const Clustering& truth,
                                             const std::vector<std::string>& methods,
                                             std::uint64_t seed = 0, int fista_iters = 200);

void write_method_report(const std::vector<MethodReportRow>& rows, const std::string& path);

// Current process peak RSS in bytes, or -1 when the platform offers none.
long long peak_memory_bytes();

}  // namespace dsc
