#ifndef SPREADRANK_EXPERIMENT_HPP
#define SPREADRANK_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spreadrank/epidemic.hpp"
#include "spreadrank/graph.hpp"
#include "spreadrank/select.hpp"

namespace spreadrank {

struct ExperimentSpec {
    std::string dataset;             // edge-list path, or empty when generating
    std::string generate;            // "ba <n> <attach> <seed>" | "er <n> <m> <seed>"
    bool directed = false;
    std::vector<std::string> methods;
    std::string sweep = "none";      // p | lambda | f | alpha | r | none
    std::vector<double> values;
    double p = 0.002;
    double lambda = 1.5;
    std::optional<double> beta;      // default 1/<k> (1/<k^out> directed)
    std::optional<double> f;         // constant decreasing factor for voterank
    double alpha = 0.0;
    Model model = Model::SirLimited;
    std::size_t replicas = 100;
    std::uint64_t seed = 0;
    bool compute_ls = true;
    std::size_t max_steps = 0;
    std::string out;                 // output CSV path; empty = stdout
};

/// Flat key = value format; '#' comments; lists are comma-separated.
ExperimentSpec parse_experiment_spec(std::istream& in, const std::string& origin = "<spec>");
ExperimentSpec load_experiment_spec(const std::string& path);

/// Resolves a spreader set for a registered method name. Voterank
/// parameters come from f/alpha/non-adjacent flags; other methods take
/// their defaults.
SpreaderSet select_spreaders(const Graph& g, const std::string& method, std::size_t r,
                             std::optional<double> f = std::nullopt, double alpha = 0.0);

const std::vector<std::string>& method_registry();

/// Runs every (method, sweep value) cell and writes one CSV row per
/// cell. Cell failures are recorded in-row; the run continues.
void run_experiment(const ExperimentSpec& spec, const Graph& g, std::ostream& csv);

/// Loads (or generates) the graph named by the spec.
Graph load_experiment_graph(const ExperimentSpec& spec);

std::size_t spreader_count_from_ratio(double p, std::size_t n);

}  // namespace spreadrank

#endif
