#include "topobench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "topobench/bits.hpp"
#include "topobench/log.hpp"
#include "topobench/mvc.hpp"
#include "topobench/qaoa.hpp"
#include "topobench/statevector.hpp"

namespace topobench {

namespace {

void validate_config(const RunConfig& config) {
    if (config.runs_per_instance < 1)
        throw std::invalid_argument("runs_per_instance must be >= 1");
    if (config.sizes.empty())
        throw std::invalid_argument("sizes must be non-empty");
    for (int n : config.sizes)
        if (n < 2) throw std::invalid_argument("subgraph sizes must be >= 2");
    if (config.samples_per_city < 1)
        throw std::invalid_argument("samples_per_city must be >= 1");
    if (config.depth < 1) throw std::invalid_argument("depth must be >= 1");
}

QaoaParams split_angles(const std::vector<double>& theta, int p) {
    QaoaParams params;
    params.p = p;
    params.gamma.assign(theta.begin(), theta.begin() + p);
    params.beta.assign(theta.begin() + p, theta.end());
    return params;
}

}  // namespace

std::vector<Instance> enumerate_instances(
    const std::vector<LabeledGraph>& cities, const RunConfig& config) {
    validate_config(config);
    std::vector<Instance> instances;
    for (const auto& [label, graph] : cities) {
        if (graph.node_count() == 0)
            throw std::invalid_argument("city \"" + label +
                                        "\" has an empty graph");
        SplitMix64 start_rng(derive_start_seed(config.master_seed, label));
        int index = 0;
        for (int sample = 0; sample < config.samples_per_city; ++sample) {
            NodeId start = graph.nodes()[start_rng.next_below(
                static_cast<std::uint64_t>(graph.node_count()))];
            for (int size : config.sizes) {
                auto sub = bfs_subgraph(graph, start, size,
                                        config.master_seed);
                if (!sub.has_value()) {
                    log_info("skipping " + label + " start " +
                             std::to_string(start) + ": fewer than " +
                             std::to_string(size) + " reachable nodes");
                    continue;
                }
                if (sub->graph.edge_count() == 0) {
                    log_info("skipping " + label + " start " +
                             std::to_string(start) + ": edgeless subgraph");
                    continue;
                }
                instances.push_back(Instance{label, index++,
                                             std::move(sub->graph),
                                             std::move(sub->order)});
            }
        }
    }
    return instances;
}

RunResult run_instance(const Graph& g, const NodeOrder& order,
                       const RunConfig& config, std::uint64_t run_seed) {
    if (g.edge_count() < 1)
        throw std::runtime_error(
            "run_instance: edgeless graph, approximation ratio undefined");
    if (!is_connected(g))
        throw std::runtime_error("run_instance: graph must be connected");

    auto t0 = std::chrono::steady_clock::now();

    VertexCoverSolution opt = solve_classical_mvc(g);
    QuboProblem qubo = build_mvc_qubo(g, order, config.qubo);
    IsingHamiltonian ising = qubo_to_ising(qubo);
    DiagonalCost diagonal = build_diagonal(ising);

    SplitMix64 rng(run_seed);
    std::vector<double> init = random_init(2 * config.depth, rng);

    // Code-path note: the optimizer minimizes the offset-free expectation;
    // the constant offset cannot move the argmin.
    auto objective = [&](const std::vector<double>& theta) {
        Statevector sv = qaoa_state(diagonal, split_angles(theta, config.depth));
        return expectation(sv, diagonal, 0.0);
    };

    OptimizationResult opt_result =
        nelder_mead_minimize(objective, init, config.optimizer);

    Statevector final_state =
        qaoa_state(diagonal, split_angles(opt_result.best_params, config.depth));
    ProbabilityTable probs = probabilities(final_state);

    RunResult result;
    result.city = config.city_label;
    result.n = g.node_count();
    result.topology = compute_metrics(g);
    result.true_opt = opt.size;
    result.seed = run_seed;

    result.hamiltonian_expectation =
        expectation(final_state, diagonal, ising.offset);

    std::string most_probable = most_probable_bitstring(probs);
    CoverAssessment assessment =
        approximation_ratio(most_probable, g, order, opt.size);
    result.most_probable = {most_probable, assessment.cover_size,
                            assessment.valid_cover};
    result.classification = classify(most_probable, g, order, opt.size);
    result.approximation_ratio = assessment.ratio;

    MinEnergyBitstring lowest = min_energy_bitstring(probs, qubo, 0.0);
    int lowest_size = static_cast<int>(
        std::count(lowest.bitstring.begin(), lowest.bitstring.end(), '1'));
    result.min_energy = {lowest.bitstring, lowest_size, lowest.energy};

    result.duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
}

std::vector<RunResult> run_experiment(const std::vector<LabeledGraph>& cities,
                                      const RunConfig& config) {
    if (cities.empty())
        throw std::invalid_argument("run_experiment: no city graphs");
    std::vector<Instance> instances = enumerate_instances(cities, config);
    if (instances.empty())
        throw std::runtime_error(
            "run_experiment: no valid instances (all samples undersized?)");

    std::vector<RunResult> results;
    results.reserve(instances.size() *
                    static_cast<std::size_t>(config.runs_per_instance));
    RunConfig per_city = config;
    for (const Instance& instance : instances) {
        per_city.city_label = instance.city;
        log_debug("instance " + instance.city + "/" +
                  std::to_string(instance.index) + ": n=" +
                  std::to_string(instance.graph.node_count()));
        for (int run = 0; run < config.runs_per_instance; ++run) {
            std::uint64_t seed = derive_run_seed(
                config.master_seed, instance.city, instance.index, run);
            results.push_back(
                run_instance(instance.graph, instance.order, per_city, seed));
        }
    }
    return results;
}

int ClassifiedCounts::total() const {
    int sum = 0;
    for (const auto& [key, per_class] : counts)
        for (int c : per_class) sum += c;
    return sum;
}

ClassifiedCounts aggregate_counts(const std::vector<RunResult>& results) {
    ClassifiedCounts agg;
    for (const RunResult& r : results) {
        auto& slot = agg.counts[{r.city, r.n}];
        ++slot[static_cast<std::size_t>(r.classification)];
    }
    return agg;
}

namespace {

nlohmann::ordered_json run_result_to_json(const RunResult& r,
                                          bool include_timings) {
    nlohmann::ordered_json doc;
    doc["city"] = r.city;
    doc["N"] = r.n;
    doc["topology"] = {{"n", r.topology.n},
                       {"m", r.topology.m},
                       {"degree_variance", r.topology.degree_variance},
                       {"fiedler", r.topology.fiedler}};
    doc["true_opt"] = r.true_opt;
    doc["most_probable"] = {{"bitstring", r.most_probable.bitstring},
                            {"cover_size", r.most_probable.cover_size},
                            {"valid_cover", r.most_probable.valid_cover}};
    doc["min_energy"] = {{"bitstring", r.min_energy.bitstring},
                         {"cover_size", r.min_energy.cover_size},
                         {"qubo_energy", r.min_energy.qubo_energy}};
    doc["hamiltonian_expectation"] = r.hamiltonian_expectation;
    doc["duration"] = include_timings ? r.duration : 0.0;
    doc["seed"] = r.seed;
    doc["classification"] = to_string(r.classification);
    doc["approximation_ratio"] = r.approximation_ratio;
    return doc;
}

const nlohmann::json& require_field(const nlohmann::json& doc,
                                    const char* name) {
    if (!doc.contains(name))
        throw std::runtime_error(std::string("results JSON: missing field \"") +
                                 name + "\"");
    return doc.at(name);
}

}  // namespace

std::string results_to_json(const std::vector<RunResult>& results,
                            bool include_timings) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const RunResult& r : results)
        doc.push_back(run_result_to_json(r, include_timings));
    return doc.dump(2) + "\n";
}

std::vector<RunResult> results_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("results JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw std::runtime_error("results JSON: expected an array");

    std::vector<RunResult> results;
    results.reserve(doc.size());
    try {
        for (const auto& entry : doc) {
            RunResult r;
            r.city = require_field(entry, "city").get<std::string>();
            r.n = require_field(entry, "N").get<int>();
            const auto& topo = require_field(entry, "topology");
            r.topology.n = require_field(topo, "n").get<int>();
            r.topology.m = require_field(topo, "m").get<int>();
            r.topology.degree_variance =
                require_field(topo, "degree_variance").get<double>();
            r.topology.fiedler = require_field(topo, "fiedler").get<double>();
            r.true_opt = require_field(entry, "true_opt").get<int>();
            const auto& mp = require_field(entry, "most_probable");
            r.most_probable.bitstring =
                require_field(mp, "bitstring").get<std::string>();
            r.most_probable.cover_size =
                require_field(mp, "cover_size").get<int>();
            r.most_probable.valid_cover =
                require_field(mp, "valid_cover").get<bool>();
            const auto& me = require_field(entry, "min_energy");
            r.min_energy.bitstring =
                require_field(me, "bitstring").get<std::string>();
            r.min_energy.cover_size =
                require_field(me, "cover_size").get<int>();
            r.min_energy.qubo_energy =
                require_field(me, "qubo_energy").get<double>();
            r.hamiltonian_expectation =
                require_field(entry, "hamiltonian_expectation").get<double>();
            r.duration = require_field(entry, "duration").get<double>();
            r.seed = require_field(entry, "seed").get<std::uint64_t>();
            r.classification = classification_from_string(
                require_field(entry, "classification").get<std::string>());
            r.approximation_ratio =
                require_field(entry, "approximation_ratio").get<double>();
            results.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("results JSON: ") + e.what());
    }
    return results;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Graph load_graph_file(const std::string& path) {
    std::string text = read_file(path);
    if (std::filesystem::path(path).extension() == ".json")
        return parse_graph_json(text);
    return parse_edge_list(text);
}

ExperimentSpec load_experiment_spec(const std::string& config_path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("config JSON: ") + e.what());
    }

    auto require = [&](const char* name) -> const nlohmann::json& {
        if (!doc.contains(name))
            throw std::runtime_error(
                std::string("config JSON: missing field \"") + name + "\"");
        return doc.at(name);
    };

    ExperimentSpec spec;
    std::filesystem::path base =
        std::filesystem::path(config_path).parent_path();

    const auto& cities = require("cities");
    if (!cities.is_array() || cities.empty())
        throw std::runtime_error(
            "config JSON: \"cities\" must be a non-empty array");
    for (const auto& city : cities) {
        if (!city.contains("label") || !city.contains("graph"))
            throw std::runtime_error(
                "config JSON: each city needs \"label\" and \"graph\"");
        spec.cities.emplace_back(
            city.at("label").get<std::string>(),
            (base / city.at("graph").get<std::string>()).string());
    }

    spec.config.sizes = require("sizes").get<std::vector<int>>();
    spec.config.master_seed = require("master_seed").get<std::uint64_t>();
    spec.config.samples_per_city = require("samples_per_city").get<int>();
    spec.config.runs_per_instance =
        doc.value("runs_per_instance", spec.config.runs_per_instance);
    spec.config.depth = doc.value("depth", spec.config.depth);
    spec.config.qubo.penalty_a =
        doc.value("penalty_a", spec.config.qubo.penalty_a);
    spec.config.qubo.cost_b = doc.value("cost_b", spec.config.qubo.cost_b);
    spec.config.record_timings =
        doc.value("record_timings", spec.config.record_timings);
    if (doc.contains("optimizer")) {
        const auto& opt = doc.at("optimizer");
        spec.config.optimizer.max_iterations =
            opt.value("max_iterations", spec.config.optimizer.max_iterations);
        spec.config.optimizer.initial_simplex_scale = opt.value(
            "initial_simplex_scale",
            spec.config.optimizer.initial_simplex_scale);
        spec.config.optimizer.convergence_tolerance = opt.value(
            "convergence_tolerance",
            spec.config.optimizer.convergence_tolerance);
    }
    spec.output = doc.value("output", spec.output);
    validate_config(spec.config);
    return spec;
}

std::vector<LabeledGraph> load_city_graphs(const ExperimentSpec& spec) {
    std::vector<LabeledGraph> cities;
    cities.reserve(spec.cities.size());
    for (const auto& [label, path] : spec.cities)
        cities.push_back({label, load_graph_file(path)});
    return cities;
}

BenchOutput run_bench_config(const std::string& config_path) {
    ExperimentSpec spec = load_experiment_spec(config_path);
    std::vector<LabeledGraph> cities = load_city_graphs(spec);
    BenchOutput out;
    out.results = run_experiment(cities, spec.config);
    out.json_bytes = results_to_json(out.results, spec.config.record_timings);
    out.output_path = spec.output;
    return out;
}

}  // namespace topobench
