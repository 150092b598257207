#ifndef SPREADRANK_EPIDEMIC_HPP
#define SPREADRANK_EPIDEMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spreadrank/graph.hpp"

namespace spreadrank {

enum class Model { SirLimited, SirFull, Si };

Model parse_model(const std::string& name);
std::string model_name(Model m);

struct SimParams {
    Model model = Model::SirLimited;
    double mu = 0.0;               // per-contact infection probability
    double beta = 1.0;             // recovery probability (unused by SI)
    std::vector<NodeId> seeds;
    std::uint64_t rng_seed = 0;
    std::size_t max_steps = 0;     // 0: defaults to 10 * n
};

struct SimTrace {
    // Index t = 0 is the initial state (seeds infected).
    std::vector<std::size_t> n_s, n_i, n_r;
    std::uint64_t rng_seed = 0;
    bool hit_step_cap = false;
    bool mu_clamped = false;

    std::size_t steps() const { return n_s.size(); }
};

/// One synchronous-update replica. Infection attempts are resolved from
/// the state at step start; recovery coins are then flipped for nodes
/// that were infected at step start.
SimTrace simulate(const Graph& g, const SimParams& params);

/// Degree-based mean-field SIR threshold <k> / (<k^2> - <k>), on
/// out-degree moments for directed graphs.
double epidemic_threshold(const Graph& g);

struct MonteCarloResult {
    std::vector<double> mean_f, std_f;  // infected scale per step
    double mean_ftc = 0.0, std_ftc = 0.0;
    std::size_t replicas = 0;
    bool mu_clamped = false;
};

/// Independent replicas with per-replica RNG streams derived from
/// (rng_seed, replica index); deterministic for a fixed master seed
/// regardless of thread count. Short traces are padded with their
/// terminal state before averaging.
MonteCarloResult monte_carlo(const Graph& g, const SimParams& params,
                             std::size_t replicas, std::size_t threads = 0);

void write_trace_csv(const SimTrace& trace, std::size_t n, std::ostream& out);
void write_aggregate_csv(const MonteCarloResult& agg, std::ostream& out);

}  // namespace spreadrank

#endif
