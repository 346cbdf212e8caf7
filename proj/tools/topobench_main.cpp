// Command-line front end: graph metrics, exact covers, single QAOA runs,
// full benchmark sweeps, and plot/figure emission.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "topobench/harness.hpp"
#include "topobench/metrics.hpp"
#include "topobench/mvc.hpp"
#include "topobench/plot.hpp"
#include "topobench/svg.hpp"

namespace {

using namespace topobench;

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << bytes;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

int cmd_metrics(const std::string& graph_path) {
    Graph g = load_graph_file(graph_path);
    GraphMetrics m = compute_metrics(g);
    nlohmann::ordered_json doc = {{"n", m.n},
                                  {"m", m.m},
                                  {"degree_variance", m.degree_variance},
                                  {"fiedler", m.fiedler}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_solve_classical(const std::string& graph_path) {
    Graph g = load_graph_file(graph_path);
    VertexCoverSolution sol = solve_classical_mvc(g);
    nlohmann::ordered_json doc = {{"size", sol.size}, {"cover", sol.cover}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_qaoa_run(const std::string& graph_path, int depth, int maxiter,
                 double opt_tol, std::uint64_t seed, double penalty_a,
                 double cost_b) {
    Graph g = load_graph_file(graph_path);
    RunConfig config;
    config.city_label = graph_path;
    config.depth = depth;
    config.qubo = {penalty_a, cost_b};
    config.optimizer.max_iterations = maxiter;
    config.optimizer.convergence_tolerance = opt_tol;
    config.record_timings = true;
    RunResult result = run_instance(g, g.nodes(), config, seed);
    std::cout << results_to_json({result}, /*include_timings=*/true);
    return 0;
}

int cmd_bench(const std::string& config_path) {
    BenchOutput out = run_bench_config(config_path);
    write_file(out.output_path, out.json_bytes);
    ClassifiedCounts counts = aggregate_counts(out.results);
    std::cerr << "wrote " << out.results.size() << " run records to "
              << out.output_path << "\n";
    for (const auto& [key, per_class] : counts.counts)
        std::cerr << "  " << key.first << " N=" << key.second << ": optimal "
                  << per_class[0] << ", suboptimal " << per_class[1]
                  << ", trivial " << per_class[2] << "\n";
    return 0;
}

int cmd_plot(const std::string& results_path, const std::string& kind,
             const std::string& out_path) {
    std::vector<RunResult> results =
        results_from_json(read_file(results_path));
    std::string csv = emit_plot_data(results, plot_kind_from_string(kind));
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return 0;
}

int cmd_figures(const std::string& csv_path, std::string out_path) {
    std::string svg = render_figure_from_csv(read_file(csv_path));
    if (out_path.empty()) {
        out_path = csv_path;
        auto dot = out_path.find_last_of('.');
        if (dot != std::string::npos) out_path.resize(dot);
        out_path += ".svg";
    }
    write_file(out_path, svg);
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAOA vertex-cover benchmark toolkit"};
    app.require_subcommand(1);

    std::string graph_path, config_path, results_path, csv_path, kind,
        out_path;
    int depth = 1, maxiter = 200;
    double opt_tol = 1e-6, penalty_a = 2.0, cost_b = 1.0;
    std::uint64_t seed = 1;

    auto* metrics = app.add_subcommand("metrics", "print graph metrics");
    metrics->add_option("graph", graph_path, "graph file")->required();

    auto* solve =
        app.add_subcommand("solve-classical", "exact minimum vertex cover");
    solve->add_option("graph", graph_path, "graph file")->required();

    auto* qaoa = app.add_subcommand("qaoa-run", "one QAOA run on one graph");
    qaoa->add_option("graph", graph_path, "graph file")->required();
    qaoa->add_option("--p", depth, "circuit depth");
    qaoa->add_option("--maxiter", maxiter, "optimizer evaluation budget");
    qaoa->add_option("--opt-tol", opt_tol, "optimizer convergence tolerance");
    qaoa->add_option("--seed", seed, "run seed");
    qaoa->add_option("--penalty-a", penalty_a, "edge-coverage penalty weight");
    qaoa->add_option("--cost-b", cost_b, "vertex cost weight");

    auto* bench = app.add_subcommand("bench", "full benchmark from a config");
    bench->add_option("--config", config_path, "config JSON")->required();

    auto* plot = app.add_subcommand("plot", "results JSON -> figure CSV");
    plot->add_option("--results", results_path, "results JSON")->required();
    plot->add_option("--kind", kind,
                     "outcome_bars | connectivity_scatter | variance_scatter")
        ->required();
    plot->add_option("--out", out_path, "output CSV (default stdout)");

    auto* figures = app.add_subcommand("figures", "figure CSV -> SVG chart");
    figures->add_option("--csv", csv_path, "plot CSV")->required();
    figures->add_option("--out", out_path, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*metrics) return cmd_metrics(graph_path);
        if (*solve) return cmd_solve_classical(graph_path);
        if (*qaoa)
            return cmd_qaoa_run(graph_path, depth, maxiter, opt_tol, seed,
                                penalty_a, cost_b);
        if (*bench) return cmd_bench(config_path);
        if (*plot) return cmd_plot(results_path, kind, out_path);
        if (*figures) return cmd_figures(csv_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
