// Command-line driver for the dense-subgraph clustering toolkit.
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsc/clustering.hpp"
#include "dsc/dense_decomposition.hpp"
#include "dsc/ensemble.hpp"
#include "dsc/fista.hpp"
#include "dsc/graph.hpp"
#include "dsc/ikc.hpp"
#include "dsc/leiden.hpp"
#include "dsc/metrics.hpp"
#include "dsc/pipeline.hpp"
#include "dsc/planted.hpp"
#include "dsc/wcc.hpp"

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_density_file(const dsc::Graph& g, const dsc::VertexValues& values,
                        const std::string& path, bool exact_column) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out << g.external_id(static_cast<dsc::NodeId>(v)) << '\t'
        << format_value(values.values[v]);
    if (exact_column && values.is_exact) out << '\t' << values.exact[v].to_string();
    out << '\n';
  }
}

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

struct FlowArgs {
  std::string edgelist, com, density;
  bool exact = false;
};

struct FistaArgs {
  int niters = 200;
  std::string edgelist, com, density;
};

int run_app(int argc, char** argv) {
  CLI::App app{"Dense subgraph clustering toolkit"};
  app.require_subcommand(1);

  // flow / flow-iter
  FlowArgs flow_args, flow_iter_args;
  CLI::App* flow = app.add_subcommand("flow", "Dense subgraph decomposition clustering");
  flow->add_option("edgelist", flow_args.edgelist, "input edgelist (TSV)")->required();
  flow->add_option("com", flow_args.com, "output community file (TSV)")->required();
  flow->add_option("density", flow_args.density, "output density file (TSV)")->required();
  flow->add_flag("--exact", flow_args.exact, "append an exact p/q column to the density file");

  CLI::App* flow_iter =
      app.add_subcommand("flow-iter", "Iterative densest-subgraph extraction clustering");
  flow_iter->add_option("edgelist", flow_iter_args.edgelist, "input edgelist (TSV)")->required();
  flow_iter->add_option("com", flow_iter_args.com, "output community file (TSV)")->required();
  flow_iter->add_option("density", flow_iter_args.density, "output density file (TSV)")->required();
  flow_iter->add_flag("--exact", flow_iter_args.exact,
                      "append an exact p/q column to the density file");

  // fista-int / fista-frac
  FistaArgs fista_int_args, fista_frac_args;
  CLI::App* fista_int = app.add_subcommand("fista-int", "FISTA loads with integer rounding");
  fista_int->add_option("niters", fista_int_args.niters, "number of iterations")->required();
  fista_int->add_option("edgelist", fista_int_args.edgelist, "input edgelist (TSV)")->required();
  fista_int->add_option("com", fista_int_args.com, "output community file (TSV)")->required();
  fista_int->add_option("density", fista_int_args.density, "output density file (TSV)")->required();

  CLI::App* fista_frac =
      app.add_subcommand("fista-frac", "Iterative FISTA extraction via fractional peeling");
  fista_frac->add_option("niters", fista_frac_args.niters, "number of iterations")->required();
  fista_frac->add_option("edgelist", fista_frac_args.edgelist, "input edgelist (TSV)")->required();
  fista_frac->add_option("com", fista_frac_args.com, "output community file (TSV)")->required();
  fista_frac->add_option("density", fista_frac_args.density, "output density file (TSV)")
      ->required();

  // ikc
  std::string ikc_edgelist, ikc_outdir;
  int ikc_k = 1;
  CLI::App* ikc = app.add_subcommand("ikc", "Iterative k-core clustering");
  ikc->add_option("--edgelist", ikc_edgelist, "input edgelist (TSV)")->required();
  ikc->add_option("--output-directory", ikc_outdir, "output directory")->required();
  ikc->add_option("--kvalue", ikc_k, "minimum k for an extracted core (recommended: 1)");

  // leiden
  std::string leiden_edgelist, leiden_outdir, leiden_model = "mod";
  double leiden_resolution = 0.01;
  std::uint64_t leiden_seed = 0;
  int leiden_iterations = 10;
  CLI::App* leiden = app.add_subcommand("leiden", "Leiden clustering (modularity or CPM)");
  leiden->add_option("--edgelist", leiden_edgelist, "input edgelist (TSV)")->required();
  leiden->add_option("--output-directory", leiden_outdir, "output directory")->required();
  leiden->add_option("--model", leiden_model, "objective: mod or cpm")
      ->check(CLI::IsMember({"mod", "cpm"}));
  leiden->add_option("--resolution", leiden_resolution, "CPM resolution (recommended: 0.01)");
  leiden->add_option("--seed", leiden_seed, "random seed");
  leiden->add_option("--iterations", leiden_iterations, "outer iteration cap");

  // wcc
  std::string wcc_edgelist, wcc_clustering, wcc_output;
  CLI::App* wcc = app.add_subcommand("wcc", "Well-connectedness post-processing");
  wcc->add_option("--edgelist", wcc_edgelist, "input edgelist (TSV)")->required();
  wcc->add_option("--clustering", wcc_clustering, "input clustering (TSV)")->required();
  wcc->add_option("--output", wcc_output, "output clustering (TSV)")->required();

  // cluster_merger
  std::string cm_mode, cm_edgelist, cm_list, cm_output_file, cm_output_graph, cm_log;
  int cm_strategy = 0;
  double cm_threshold = -1.0;
  CLI::App* merger = app.add_subcommand("cluster_merger", "Agreement-weighted edge filtering");
  merger->add_option("mode", cm_mode, "merger mode (Weighted)")->required();
  merger->add_option("--edgelist", cm_edgelist, "input edgelist (TSV)")->required();
  merger->add_option("--clustering-list", cm_list, "file listing clustering TSV paths")
      ->required();
  merger->add_option("--weighting-strategy", cm_strategy, "weighting strategy (only 0)");
  merger->add_option("--threshold", cm_threshold,
                     "drop edges with weight below this (default: -1, recommended: 0.5)");
  merger->add_option("--output-file", cm_output_file, "must be \"\" (merged clustering unsupported)");
  merger->add_option("--output-weighted-graph", cm_output_graph,
                     "output weighted graph (TSV: source, target, weight)")
      ->required();
  merger->add_option("--log-file", cm_log, "log file path");

  // eval
  std::string eval_edgelist, eval_truth, eval_est, eval_out;
  CLI::App* eval = app.add_subcommand("eval", "Score a clustering against ground truth");
  eval->add_option("--edgelist", eval_edgelist, "input edgelist (TSV)")->required();
  eval->add_option("--truth", eval_truth, "ground-truth clustering (TSV)")->required();
  eval->add_option("--est", eval_est, "estimated clustering (TSV)")->required();
  eval->add_option("--out", eval_out, "report path (.json for JSON, else TSV)")->required();

  // gen
  int gen_clusters = 4, gen_size = 25;
  double gen_pin = 0.5, gen_pout = 0.01;
  std::uint64_t gen_seed = 0;
  std::string gen_edge_out, gen_truth_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a planted-partition network");
  gen->add_option("--n-clusters", gen_clusters, "number of planted clusters");
  gen->add_option("--cluster-size", gen_size, "nodes per cluster");
  gen->add_option("--p-in", gen_pin, "within-cluster edge probability");
  gen->add_option("--p-out", gen_pout, "between-cluster edge probability");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--output-edgelist", gen_edge_out, "output edgelist (TSV)")->required();
  gen->add_option("--output-clustering", gen_truth_out, "output ground truth (TSV)")->required();

  // compare
  std::string cmp_edgelist, cmp_truth, cmp_out, cmp_methods =
      "dsc-flow,dsc-flow-iter,dsc-fista-int,dsc-fista-iter,ikc,leiden-mod,leiden-cpm,ensemble";
  std::uint64_t cmp_seed = 0;
  int cmp_fista_iters = 200;
  CLI::App* compare = app.add_subcommand("compare", "Run several methods and tabulate accuracy");
  compare->add_option("--edgelist", cmp_edgelist, "input edgelist (TSV)")->required();
  compare->add_option("--truth", cmp_truth, "ground-truth clustering (TSV)")->required();
  compare->add_option("--methods", cmp_methods, "comma-separated method names");
  compare->add_option("--out", cmp_out, "output report (TSV)")->required();
  compare->add_option("--seed", cmp_seed, "random seed");
  compare->add_option("--fista-iters", cmp_fista_iters, "FISTA iteration count");

  // pipeline
  dsc::PipelineConfig pipe_cfg;
  CLI::App* pipeline = app.add_subcommand("pipeline", "Run the 4-stage recommended pipeline");
  pipeline->add_option("edgelist", pipe_cfg.edgelist_path, "input edgelist (TSV)")->required();
  pipeline->add_option("output_directory", pipe_cfg.output_directory, "output directory")
      ->required();
  pipeline->add_option("--threshold", pipe_cfg.threshold, "edge-retention threshold (default 0.5)");
  bool pipe_weighted = false;
  pipeline->add_flag("--weighted", pipe_weighted, "cluster the weighted merged network");
  pipeline->add_option("--resolution", pipe_cfg.cpm_resolution, "CPM resolution (default 0.01)");
  pipeline->add_option("--seed", pipe_cfg.leiden_seed, "Leiden random seed");
  pipeline->add_option("--inputs", pipe_cfg.stage2_clustering,
                       "externally produced clustering TSV replacing stage 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*flow || *flow_iter) {
    const FlowArgs& args = *flow ? flow_args : flow_iter_args;
    dsc::Graph g = dsc::Graph::load_edgelist(args.edgelist);
    if (g.self_loops_dropped() > 0)
      std::cerr << "warning: dropped " << g.self_loops_dropped() << " self-loop(s)\n";
    if (*flow) {
      dsc::DenseDecomposition dec = dsc::dense_decomposition(g);
      dsc::Clustering c = dsc::dsc_flow_cluster(g);
      dsc::write_clustering_tsv(g, c, args.com);
      write_density_file(g, dec.values, args.density, args.exact);
      std::cout << "clusters: " << c.cluster_count()
                << "  coverage: " << format_value(dsc::node_coverage(c)) << '\n';
    } else {
      dsc::FlowIterResult res = dsc::dsc_flow_iter_cluster(g);
      dsc::write_clustering_tsv(g, res.clustering, args.com);
      write_density_file(g, res.values, args.density, args.exact);
      std::cout << "clusters: " << res.clustering.cluster_count()
                << "  coverage: " << format_value(dsc::node_coverage(res.clustering)) << '\n';
    }
    return 0;
  }

  if (*fista_int || *fista_frac) {
    const FistaArgs& args = *fista_int ? fista_int_args : fista_frac_args;
    dsc::Graph g = dsc::Graph::load_edgelist(args.edgelist);
    if (*fista_int) {
      dsc::VertexValues values = dsc::fista_solve(g, args.niters);
      dsc::Clustering c = dsc::dsc_fista_int_cluster(g, args.niters);
      dsc::write_clustering_tsv(g, c, args.com);
      write_density_file(g, values, args.density, false);
      std::cout << "clusters: " << c.cluster_count()
                << "  coverage: " << format_value(dsc::node_coverage(c)) << '\n';
    } else {
      dsc::FistaIterResult res = dsc::dsc_fista_iter_cluster(g, args.niters);
      dsc::write_clustering_tsv(g, res.clustering, args.com);
      dsc::VertexValues values;
      values.values = res.extraction_density;
      values.is_exact = false;
      write_density_file(g, values, args.density, false);
      std::cout << "clusters: " << res.clustering.cluster_count()
                << "  coverage: " << format_value(dsc::node_coverage(res.clustering)) << '\n';
    }
    return 0;
  }

  if (*ikc) {
    dsc::Graph g = dsc::Graph::load_edgelist(ikc_edgelist);
    dsc::Clustering c = dsc::ikc_cluster(g, ikc_k);
    std::filesystem::create_directories(ikc_outdir);
    dsc::write_clustering_tsv(g, c,
                              (std::filesystem::path(ikc_outdir) / "clustering.tsv").string());
    std::cout << "clusters: " << c.cluster_count() << '\n';
    return 0;
  }

  if (*leiden) {
    dsc::Graph g = dsc::Graph::load_edgelist(leiden_edgelist);
    dsc::ObjectiveSpec obj = leiden_model == "cpm" ? dsc::ObjectiveSpec::cpm(leiden_resolution)
                                                   : dsc::ObjectiveSpec::mod();
    dsc::Clustering c = dsc::leiden_cluster(g, obj, leiden_seed, leiden_iterations);
    std::filesystem::create_directories(leiden_outdir);
    dsc::write_clustering_tsv(g, c,
                              (std::filesystem::path(leiden_outdir) / "clustering.tsv").string());
    std::cout << "clusters: " << c.cluster_count()
              << "  quality: " << format_value(dsc::quality(g, c, obj)) << '\n';
    return 0;
  }

  if (*wcc) {
    dsc::Graph g = dsc::Graph::load_edgelist(wcc_edgelist);
    dsc::Clustering c = dsc::read_clustering_tsv(g, wcc_clustering);
    dsc::Clustering treated = dsc::wcc_treatment(g, c);
    dsc::write_clustering_tsv(g, treated, wcc_output);
    std::cout << "clusters: " << treated.cluster_count() << '\n';
    return 0;
  }

  if (*merger) {
    if (cm_mode != "Weighted") {
      std::cerr << "cluster_merger: unknown mode '" << cm_mode << "' (expected Weighted)\n";
      return 1;
    }
    if (cm_strategy != 0) {
      std::cerr << "cluster_merger: only --weighting-strategy 0 is defined\n";
      return 1;
    }
    if (!cm_output_file.empty()) {
      std::cerr << "cluster_merger: --output-file must be \"\"; the pipeline clusters the "
                   "merged graph as a separate step\n";
      return 1;
    }
    std::ofstream log;
    if (!cm_log.empty()) log.open(cm_log, std::ios::app);
    auto log_line = [&](const std::string& msg) {
      if (log) log << iso_timestamp() << " INFO " << msg << '\n';
    };
    dsc::Graph g = dsc::Graph::load_edgelist(cm_edgelist);
    log_line("loaded network: " + std::to_string(g.node_count()) + " nodes, " +
             std::to_string(g.edge_count()) + " edges");
    std::ifstream list(cm_list);
    if (!list) throw std::runtime_error("cannot open clustering list: " + cm_list);
    std::vector<dsc::Clustering> clusterings;
    std::string line;
    while (std::getline(list, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      clusterings.push_back(dsc::read_clustering_tsv(g, line));
      log_line("loaded clustering: " + line);
    }
    auto records = dsc::compute_edge_weights(g, clusterings);
    std::ofstream out(cm_output_graph);
    if (!out) throw std::runtime_error("cannot open output file: " + cm_output_graph);
    std::size_t kept = 0;
    for (const dsc::EnsembleEdgeRecord& rec : records) {
      if (rec.weight > 0.0 && rec.weight >= cm_threshold) {
        out << g.external_id(rec.u) << '\t' << g.external_id(rec.v) << '\t'
            << format_value(rec.weight) << '\n';
        ++kept;
      }
    }
    log_line("kept " + std::to_string(kept) + " of " + std::to_string(records.size()) +
             " edges at threshold " + format_value(cm_threshold));
    return 0;
  }

  if (*eval) {
    dsc::Graph g = dsc::Graph::load_edgelist(eval_edgelist);
    dsc::Clustering truth = dsc::read_clustering_tsv(g, eval_truth);
    dsc::Clustering est = dsc::read_clustering_tsv(g, eval_est);
    dsc::ContingencyTable tab = dsc::contingency(truth, est);
    dsc::PairMetrics pm = dsc::pair_metrics(truth, est);
    double scores[7] = {dsc::ami(tab),   dsc::ari(tab), dsc::nmi(tab),         pm.precision,
                        pm.recall,       pm.fpr,        dsc::node_coverage(est)};
    const char* names[7] = {"ami", "ari", "nmi", "precision", "recall", "fpr", "coverage"};
    if (eval_out.size() >= 5 && eval_out.substr(eval_out.size() - 5) == ".json") {
      nlohmann::json j;
      for (int i = 0; i < 7; ++i) j[names[i]] = scores[i];
      std::ofstream out(eval_out);
      out << j.dump(2) << '\n';
    } else {
      std::ofstream out(eval_out);
      char buf[64];
      for (int i = 0; i < 7; ++i) {
        std::snprintf(buf, sizeof(buf), "%s\t%.6f\n", names[i], scores[i]);
        out << buf;
      }
    }
    return 0;
  }

  if (*gen) {
    dsc::PlantedPartition pp =
        dsc::generate_planted_partition(gen_clusters, gen_size, gen_pin, gen_pout, gen_seed);
    pp.graph.write_edgelist(gen_edge_out);
    dsc::write_clustering_tsv(pp.graph, pp.truth, gen_truth_out);
    std::cout << "nodes: " << pp.graph.node_count() << "  edges: " << pp.graph.edge_count()
              << '\n';
    return 0;
  }

  if (*compare) {
    dsc::Graph g = dsc::Graph::load_edgelist(cmp_edgelist);
    dsc::Clustering truth = dsc::read_clustering_tsv(g, cmp_truth);
    std::vector<std::string> methods;
    std::string token;
    std::stringstream ss(cmp_methods);
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) methods.push_back(token);
    }
    auto rows = dsc::compare_methods(g, truth, methods, cmp_seed, cmp_fista_iters);
    dsc::write_method_report(rows, cmp_out);
    return 0;
  }

  if (*pipeline) {
    pipe_cfg.weighted_merge = pipe_weighted;
    dsc::PipelineResult res = dsc::run_pipeline(pipe_cfg);
    std::cout << "final clusters: " << res.final_clustering.cluster_count() << '\n';
    for (std::size_t i = 0; i < res.timing.stages.size(); ++i) {
      std::cout << "stage " << (i + 1) << " (" << res.timing.stages[i].name
                << "): " << format_value(res.timing.stages[i].seconds) << "s\n";
    }
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
