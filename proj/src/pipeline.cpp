#include "dsc/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dsc/dense_decomposition.hpp"
#include "dsc/ensemble.hpp"
#include "dsc/fista.hpp"
#include "dsc/ikc.hpp"
#include "dsc/leiden.hpp"
#include "dsc/metrics.hpp"
#include "dsc/wcc.hpp"

namespace dsc {

namespace {

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

class Logger {
 public:
  explicit Logger(const std::string& path) : out_(path, std::ios::app) {}
  void info(const std::string& msg) {
    if (out_) out_ << iso_timestamp() << " INFO " << msg << '\n' << std::flush;
  }

 private:
  std::ofstream out_;
};

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_density_tsv(const Graph& g, const std::vector<double>& values,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out << g.external_id(static_cast<NodeId>(v)) << '\t' << format_value(values[v]) << '\n';
  }
}

void write_merged_tsv(const Graph& g, const std::vector<EnsembleEdgeRecord>& records,
                      double threshold, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (const EnsembleEdgeRecord& rec : records) {
    if (rec.weight > 0.0 && rec.weight >= threshold) {
      out << g.external_id(rec.u) << '\t' << g.external_id(rec.v) << '\t'
          << format_value(rec.weight) << '\n';
    }
  }
}

Clustering run_ensemble_in_memory(const Graph& g, double threshold, bool weighted,
                                  double resolution, std::uint64_t seed) {
  Clustering stage1 = dsc_flow_iter_cluster(g).clustering;
  Clustering stage2 = leiden_cluster(g, ObjectiveSpec::mod(), seed);
  auto records = compute_edge_weights(g, {stage1, stage2});
  MergerConfig merge_cfg;
  merge_cfg.threshold = threshold;
  merge_cfg.weighted_output = weighted;
  Graph merged = build_merged_network(g, records, merge_cfg);
  Clustering stage4 = leiden_cluster(merged, ObjectiveSpec::cpm(resolution), seed);
  return wcc_treatment(merged, stage4);
}

}  // namespace

long long peak_memory_bytes() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmPeak:", 0) == 0) {
      std::istringstream iss(line.substr(7));
      long long kb = 0;
      iss >> kb;
      if (kb > 0) return kb * 1024;
    }
  }
  return -1;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_directory);
  auto path_in_out = [&](const std::string& name) {
    return (fs::path(cfg.output_directory) / name).string();
  };
  Logger log(cfg.log_path.empty() ? path_in_out("pipeline_log.txt") : cfg.log_path);

  PipelineResult result;
  Graph g = Graph::load_edgelist(cfg.edgelist_path, /*weighted=*/false);
  log.info("loaded network: " + std::to_string(g.node_count()) + " nodes, " +
           std::to_string(g.edge_count()) + " edges");

  // Stage 1: iterative densest-subgraph extraction.
  auto t1 = std::chrono::steady_clock::now();
  FlowIterResult stage1 = dsc_flow_iter_cluster(g);
  double s1 = seconds_since(t1);
  write_clustering_tsv(g, stage1.clustering, path_in_out("stage1_flow_iter_clustering.tsv"));
  write_density_tsv(g, stage1.values.values, path_in_out("stage1_flow_iter_density.tsv"));
  result.timing.stages.push_back({"flow-iter", s1, g.node_count(), g.edge_count()});
  log.info("stage 1 (flow-iter) done in " + format_value(s1) + "s, coverage " +
           format_value(node_coverage(stage1.clustering)));

  // Stage 2: modularity clustering (or an externally supplied clustering).
  auto t2 = std::chrono::steady_clock::now();
  Clustering stage2 = cfg.stage2_clustering.empty()
                          ? leiden_cluster(g, ObjectiveSpec::mod(), cfg.leiden_seed)
                          : read_clustering_tsv(g, cfg.stage2_clustering);
  double s2 = seconds_since(t2);
  write_clustering_tsv(g, stage2, path_in_out("stage2_leiden_mod_clustering.tsv"));
  result.timing.stages.push_back({"leiden-mod", s2, g.node_count(), g.edge_count()});
  log.info("stage 2 (" + std::string(cfg.stage2_clustering.empty() ? "leiden-mod" : "external") +
           ") done in " + format_value(s2) + "s");

  // Stage 3: agreement weights and edge filtering.
  auto t3 = std::chrono::steady_clock::now();
  auto records = compute_edge_weights(g, {stage1.clustering, stage2});
  MergerConfig merge_cfg;
  merge_cfg.threshold = cfg.threshold;
  merge_cfg.weighted_output = cfg.weighted_merge;
  Graph merged = build_merged_network(g, records, merge_cfg);
  double s3 = seconds_since(t3);
  write_merged_tsv(g, records, cfg.threshold, path_in_out("stage3_merged_network.tsv"));
  result.timing.stages.push_back({"merge", s3, merged.node_count(), merged.edge_count()});
  log.info("stage 3 (merge, t=" + format_value(cfg.threshold) + ") kept " +
           std::to_string(merged.edge_count()) + " of " + std::to_string(g.edge_count()) +
           " edges");

  // Stage 4: CPM clustering of the merged network plus well-connectedness
  // post-processing. The merged network preserves the original universe, so
  // nodes isolated by stage 3 come out as singletons.
  auto t4 = std::chrono::steady_clock::now();
  Clustering stage4 = leiden_cluster(merged, ObjectiveSpec::cpm(cfg.cpm_resolution),
                                     cfg.leiden_seed);
  Clustering final_clustering = wcc_treatment(merged, stage4);
  double s4 = seconds_since(t4);
  write_clustering_tsv(merged, stage4, path_in_out("stage4_leiden_cpm_clustering.tsv"));
  write_clustering_tsv(merged, final_clustering, path_in_out("final_clustering.tsv"));
  result.timing.stages.push_back({"leiden-cpm+wcc", s4, merged.node_count(), merged.edge_count()});
  log.info("stage 4 (leiden-cpm+wcc) done in " + format_value(s4) + "s, " +
           std::to_string(final_clustering.cluster_count()) + " clusters");

  result.timing.peak_memory_bytes = peak_memory_bytes();
  {
    std::ofstream out(cfg.timing_path.empty() ? path_in_out("stage_timing.tsv")
                                              : cfg.timing_path);
    out << "stage\tname\tseconds\tnodes\tedges\n";
    for (std::size_t i = 0; i < result.timing.stages.size(); ++i) {
      const auto& st = result.timing.stages[i];
      out << (i + 1) << '\t' << st.name << '\t' << format_value(st.seconds) << '\t' << st.nodes
          << '\t' << st.edges << '\n';
    }
    if (result.timing.peak_memory_bytes >= 0)
      out << "#\tpeak_memory_bytes\t" << result.timing.peak_memory_bytes << "\t-\t-\n";
  }

  result.final_clustering = std::move(final_clustering);
  result.network = std::move(g);
  return result;
}

std::vector<MethodReportRow> compare_methods(const Graph& g, const Clustering& truth,
                                             const std::vector<std::string>& methods,
                                             std::uint64_t seed, int fista_iters) {
  std::vector<MethodReportRow> rows;
  for (const std::string& name : methods) {
    auto start = std::chrono::steady_clock::now();
    Clustering est;
    if (name == "dsc-flow") {
      est = dsc_flow_cluster(g);
    } else if (name == "dsc-flow-iter") {
      est = dsc_flow_iter_cluster(g).clustering;
    } else if (name == "dsc-fista-int") {
      est = dsc_fista_int_cluster(g, fista_iters);
    } else if (name == "dsc-fista-iter") {
      est = dsc_fista_iter_cluster(g, fista_iters).clustering;
    } else if (name == "ikc") {
      est = ikc_cluster(g, 1);
    } else if (name == "leiden-mod") {
      est = leiden_cluster(g, ObjectiveSpec::mod(), seed);
    } else if (name == "leiden-cpm") {
      est = leiden_cluster(g, ObjectiveSpec::cpm(0.01), seed);
    } else if (name == "ensemble") {
      est = run_ensemble_in_memory(g, 0.5, false, 0.01, seed);
    } else {
      throw std::invalid_argument("compare_methods: unknown method '" + name + "'");
    }
    MethodReportRow row;
    row.method = name;
    row.seconds = seconds_since(start);
    ContingencyTable tab = contingency(truth, est);
    row.ami = ami(tab);
    row.ari = ari(tab);
    row.nmi = nmi(tab);
    PairMetrics pm = pair_metrics(truth, est);
    row.precision = pm.precision;
    row.recall = pm.recall;
    row.fpr = pm.fpr;
    row.coverage = node_coverage(est);
    rows.push_back(row);
  }
  return rows;
}

void write_method_report(const std::vector<MethodReportRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "method\tami\tari\tnmi\tprecision\trecall\tfpr\tcoverage\tseconds\n";
  char buf[256];
  for (const MethodReportRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\n",
                  r.method.c_str(), r.ami, r.ari, r.nmi, r.precision, r.recall, r.fpr, r.coverage,
                  r.seconds);
    out << buf;
  }
}

}  // namespace dsc
