#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topobench/classify.hpp"
#include "topobench/graph.hpp"
#include "topobench/metrics.hpp"
#include "topobench/nelder_mead.hpp"
#include "topobench/qubo.hpp"

namespace topobench {

// Experiment configuration shared by every run of one city; see
// docs/FORMATS.md for the JSON config schema.
struct RunConfig {
    std::string city_label;
    std::vector<int> sizes;        // subgraph sizes, each >= 2
    int runs_per_instance = 10;
    int depth = 1;                 // QAOA p
    QuboParams qubo;
    OptimizerConfig optimizer;
    std::uint64_t master_seed = 1;
    int samples_per_city = 1;
    // Wall-clock durations are measured for every run, but written to
    // results files only when this is set: the results file is a
    // byte-reproducible artifact and timings are not.
    bool record_timings = false;
};

struct MostProbableOutcome {
    std::string bitstring;
    int cover_size = 0;        // repaired size when valid_cover is false
    bool valid_cover = false;
};

struct MinEnergyOutcome {
    std::string bitstring;
    int cover_size = 0;
    double qubo_energy = 0.0;
};

// Full outcome record of one seeded QAOA run.
struct RunResult {
    std::string city;
    int n = 0;  // serialized as "N"
    GraphMetrics topology;
    int true_opt = 0;
    MostProbableOutcome most_probable;
    MinEnergyOutcome min_energy;
    double hamiltonian_expectation = 0.0;
    double duration = 0.0;  // wall-clock seconds
    std::uint64_t seed = 0;
    Classification classification = Classification::kTrivial;
    double approximation_ratio = 0.0;
};

struct LabeledGraph {
    std::string label;
    Graph graph;
};

// One sampled subgraph scheduled for runs_per_instance runs.
struct Instance {
    std::string city;
    int index = 0;  // per-city, in sampling order
    Graph graph;
    NodeOrder order;
};

// BFS-samples subgraphs for every (city, start node, size) combination,
// skipping undersized or edgeless samples. Deterministic in
// config.master_seed.
std::vector<Instance> enumerate_instances(
    const std::vector<LabeledGraph>& cities, const RunConfig& config);

// One complete QAOA run: encode, optimize from a seeded random start,
// extract bitstrings, classify. Deterministic given (g, order, config,
// run_seed) in every field except the measured duration.
RunResult run_instance(const Graph& g, const NodeOrder& order,
                       const RunConfig& config, std::uint64_t run_seed);

// Full protocol over a labeled graph collection; records are ordered by
// (city position in `cities`, instance index, run index). Throws when no
// valid instance exists.
std::vector<RunResult> run_experiment(const std::vector<LabeledGraph>& cities,
                                      const RunConfig& config);

// Per-(city, N) outcome counts, indexed by Classification.
struct ClassifiedCounts {
    std::map<std::pair<std::string, int>, std::array<int, 3>> counts;

    int total() const;
};

ClassifiedCounts aggregate_counts(const std::vector<RunResult>& results);

// Results file serialization (schema in docs/FORMATS.md). Durations are
// written as 0.0 unless include_timings is set.
std::string results_to_json(const std::vector<RunResult>& results,
                            bool include_timings);
std::vector<RunResult> results_from_json(const std::string& text);

// Reads a graph file; ".json" selects the JSON graph format, anything else
// is parsed as an edge list.
Graph load_graph_file(const std::string& path);

// A bench config file: per-city graph paths plus the shared RunConfig.
struct ExperimentSpec {
    std::vector<std::pair<std::string, std::string>> cities;  // label, path
    RunConfig config;
    std::string output = "results.json";
};

// Parses a config file; graph paths resolve relative to the config's
// directory.
ExperimentSpec load_experiment_spec(const std::string& config_path);
std::vector<LabeledGraph> load_city_graphs(const ExperimentSpec& spec);

struct BenchOutput {
    std::vector<RunResult> results;
    std::string json_bytes;
    std::string output_path;
};

// Loads the config, runs the experiment, and serializes the results
// (without writing the file; callers decide where the bytes go).
BenchOutput run_bench_config(const std::string& config_path);

}  // namespace topobench
