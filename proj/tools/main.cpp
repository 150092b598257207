#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "spreadrank/baselines.hpp"
#include "spreadrank/epidemic.hpp"
#include "spreadrank/experiment.hpp"
#include "spreadrank/graph.hpp"
#include "spreadrank/metrics.hpp"
#include "spreadrank/select.hpp"

namespace {

using namespace spreadrank;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void print_stats(const Graph& g, const std::string& out_path) {
    const GraphStats st = compute_stats(g);
    std::ofstream file;
    auto& out = open_out(file, out_path);
    out << "n,m,mean_degree,max_degree,mean_clustering,heterogeneity\n";
    out << st.n << ',' << st.m << ',' << st.mean_degree << ',' << st.max_degree << ','
        << st.mean_clustering << ',' << st.heterogeneity << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Influential spreader selection and epidemic evaluation on networks"};
    app.require_subcommand(1);

    std::string dataset, out_path, method = "voterank", model_name_str = "sir_limited";
    std::string seeds_file, spec_path;
    bool directed = false, non_adjacent = false, use_out_degree = false;
    std::size_t r = 0, replicas = 100, max_steps = 0;
    double p = 0.0, lambda = 1.5, alpha = 0.0;
    std::optional<double> beta, f_opt, mu_opt;
    std::uint64_t seed = 0;

    auto add_dataset = [&](CLI::App* cmd) {
        cmd->add_option("dataset", dataset, "edge-list file")->required();
        cmd->add_flag("--directed", directed, "treat edges as directed");
        cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
    };

    auto* stats_cmd = app.add_subcommand("stats", "summarize a network");
    add_dataset(stats_cmd);

    auto* rank_cmd = app.add_subcommand("rank", "select spreaders with one method");
    add_dataset(rank_cmd);
    rank_cmd->add_option("--method", method, "method name");
    rank_cmd->add_option("--r", r, "number of spreaders");
    rank_cmd->add_option("--p", p, "spreader ratio; r = round(p*n)");
    rank_cmd->add_option("--f", f_opt, "constant decreasing factor (voterank)");
    rank_cmd->add_option("--alpha", alpha, "initial ability exponent (voterank)");
    rank_cmd->add_flag("--non-adjacent", non_adjacent, "forbid adjacent spreaders");
    rank_cmd->add_flag("--out-degree", use_out_degree, "degree method: rank by out-degree");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo spreading from a seed set");
    add_dataset(sim_cmd);
    sim_cmd->add_option("--method", method, "seed selection method");
    sim_cmd->add_option("--seeds", seeds_file, "file with one seed label per line");
    sim_cmd->add_option("--r", r, "number of spreaders");
    sim_cmd->add_option("--p", p, "spreader ratio");
    sim_cmd->add_option("--lambda", lambda, "infected rate mu/beta");
    sim_cmd->add_option("--beta", beta, "recovery probability (default 1/<k>)");
    sim_cmd->add_option("--mu", mu_opt, "infection probability (overrides lambda*beta)");
    sim_cmd->add_option("--model", model_name_str, "sir_limited | sir_full | si");
    sim_cmd->add_option("--replicas", replicas, "independent runs");
    sim_cmd->add_option("--seed", seed, "master RNG seed");
    sim_cmd->add_option("--max-steps", max_steps, "step cap (default 10n)");
    sim_cmd->add_option("--f", f_opt, "constant decreasing factor (voterank)");
    sim_cmd->add_option("--alpha", alpha, "initial ability exponent (voterank)");

    auto* exp_cmd = app.add_subcommand("experiment", "run a sweep from a spec file");
    exp_cmd->add_option("spec", spec_path, "experiment spec file")->required();
    exp_cmd->add_option("--out", out_path, "override the spec's output path");
    exp_cmd->add_option("--replicas", replicas, "override replica count");

    CLI11_PARSE(app, argc, argv);

    if (stats_cmd->parsed()) {
        print_stats(load_edge_list(dataset, directed), out_path);
        return 0;
    }

    if (rank_cmd->parsed()) {
        Graph g = load_edge_list(dataset, directed);
        if (p > 0.0) r = spreader_count_from_ratio(p, g.node_count());
        std::ofstream file;
        auto& out = open_out(file, out_path);
        if (r == 0) {
            out << "rank,node_label,score\n";
            return 0;
        }
        std::string name = method;
        if (non_adjacent && method == "voterank") name = "voterank-non";
        if (non_adjacent && method == "kshell") name = "kshell-non";
        if (method == "degree" && use_out_degree) name = "outdegree";
        SpreaderSet s = select_spreaders(g, name, r, f_opt, alpha);
        if (s.exhausted)
            std::cerr << "warning: candidate pool exhausted after " << s.size()
                      << " of " << r << " spreaders\n";
        if (s.clamped_f) std::cerr << "warning: decreasing factor clamped to [0, 1]\n";
        write_spreaders_csv(s, g, out);
        return 0;
    }

    if (sim_cmd->parsed()) {
        Graph g = load_edge_list(dataset, directed);
        const GraphStats st = compute_stats(g);
        SimParams params;
        params.model = parse_model(model_name_str);
        params.beta = beta.value_or(st.mean_degree > 0.0 ? 1.0 / st.mean_degree : 1.0);
        params.mu = mu_opt.value_or(lambda * params.beta);
        params.rng_seed = seed;
        params.max_steps = max_steps;
        if (!seeds_file.empty()) {
            std::ifstream in(seeds_file);
            if (!in) throw std::runtime_error("cannot open seeds file: " + seeds_file);
            std::unordered_map<std::string, NodeId> by_label;
            for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u)
                by_label[g.label(u)] = u;
            std::string label;
            while (in >> label) {
                auto it = by_label.find(label);
                if (it == by_label.end())
                    throw std::runtime_error("unknown node label in seeds file: " + label);
                params.seeds.push_back(it->second);
            }
        } else {
            if (p > 0.0) r = spreader_count_from_ratio(p, g.node_count());
            if (r == 0) throw std::runtime_error("need --seeds, --r or --p");
            params.seeds = select_spreaders(g, method, r, f_opt, alpha).nodes;
        }
        auto agg = monte_carlo(g, params, replicas);
        if (agg.mu_clamped) std::cerr << "warning: mu clamped to 1\n";
        std::ofstream file;
        write_aggregate_csv(agg, open_out(file, out_path));
        return 0;
    }

    // experiment
    ExperimentSpec spec = load_experiment_spec(spec_path);
    if (exp_cmd->count("--replicas") > 0) spec.replicas = replicas;
    if (!out_path.empty()) spec.out = out_path;
    Graph g = load_experiment_graph(spec);
    std::ofstream file;
    run_experiment(spec, g, open_out(file, spec.out));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
