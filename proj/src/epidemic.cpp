#include "spreadrank/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace spreadrank {

Model parse_model(const std::string& name) {
    if (name == "sir" || name == "sir_limited" || name == "sir-limited") return Model::SirLimited;
    if (name == "sir_full" || name == "sir-full") return Model::SirFull;
    if (name == "si") return Model::Si;
    throw std::invalid_argument("unknown model: " + name);
}

std::string model_name(Model m) {
    switch (m) {
        case Model::SirLimited: return "sir_limited";
        case Model::SirFull: return "sir_full";
        case Model::Si: return "si";
    }
    return "?";
}

namespace {

enum State : char { S = 0, I = 1, R = 2 };

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

///// Engine for replica streams: seeded from (master seed, replica index)
/// so replicas are decorrelated and independent of execution order.
std::mt19937_64 replica_rng(std::uint64_t master, std::uint64_t replica) {
    return std::mt19937_64(splitmix64(splitmix64(master) ^ (replica + 1)));
}

}  // namespace

SimTrace simulate(const Graph& g, const SimParams& params) {
    if (params.seeds.empty()) throw std::invalid_argument("seed set is empty");
    for (NodeId s : params.seeds) g.check_node(s);
    const bool sir = params.model != Model::Si;
    if (sir && (params.beta <= 0.0 || params.beta > 1.0))
        throw std::invalid_argument("beta must be in (0, 1] for SIR models");

    SimTrace trace;
    trace.rng_seed = params.rng_seed;
    double mu = params.mu;
    if (mu < 0.0) throw std::invalid_argument("mu must be non-negative");
    if (mu > 1.0) {
        mu = 1.0;
        trace.mu_clamped = true;
    }

    const std::size_t n = g.node_count();
    const std::size_t max_steps = params.max_steps > 0 ? params.max_steps : 10 * n;

    std::vector<char> state(n, S);
    std::vector<NodeId> infected;
    for (NodeId s : params.seeds) {
        if (state[static_cast<std::size_t>(s)] == S) {
            state[static_cast<std::size_t>(s)] = I;
            infected.push_back(s);
        }
    }

    std::size_t count_i = infected.size();
    std::size_t count_r = 0;
    auto record = [&] {
        trace.n_i.push_back(count_i);
        trace.n_r.push_back(count_r);
        trace.n_s.push_back(n - count_i - count_r);
    };
    record();  // t = 0

    std::mt19937_64 rng = replica_rng(params.rng_seed, 0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<NodeId> newly_infected;

    for (std::size_t t = 0; t < max_steps && count_i > 0; ++t) {
        newly_infected.clear();
        // Infection attempts from the state at step start.
        for (NodeId u : infected) {
            auto nbrs = g.neighbors(u);
            if (params.model == Model::SirFull) {
                for (NodeId v : nbrs) {
                    if (state[static_cast<std::size_t>(v)] == S && coin(rng) < mu) {
                        state[static_cast<std::size_t>(v)] = I;
                        newly_infected.push_back(v);
                    }
                }
            } else {
                if (nbrs.empty()) continue;
                const NodeId v = nbrs[std::uniform_int_distribution<std::size_t>(
                    0, nbrs.size() - 1)(rng)];
                // A contact with a non-susceptible neighbor wastes the attempt.
                if (state[static_cast<std::size_t>(v)] == S && coin(rng) < mu) {
                    state[static_cast<std::size_t>(v)] = I;
                    newly_infected.push_back(v);
                }
            }
        }
        count_i += newly_infected.size();
        // Recovery for nodes infected at step start.
        if (sir) {
            std::size_t kept = 0;
            for (NodeId u : infected) {
                if (coin(rng) < params.beta) {
                    state[static_cast<std::size_t>(u)] = R;
                    ++count_r;
                    --count_i;
                } else {
                    infected[kept++] = u;
                }
            }
            infected.resize(kept);
        }
        infected.insert(infected.end(), newly_infected.begin(), newly_infected.end());
        record();
        if (params.model == Model::Si && count_i + count_r == n) break;
    }
    trace.hit_step_cap = count_i > 0 && params.model != Model::Si;
    // SI never empties its infected set; cap or saturation ends the run.
    if (params.model == Model::Si)
        trace.hit_step_cap = trace.steps() - 1 >= max_steps;
    return trace;
}

double epidemic_threshold(const Graph& g) {
    const double n = static_cast<double>(g.node_count());
    double sum_k = 0.0, sum_k2 = 0.0;
    for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u) {
        const double k = static_cast<double>(g.degree(u));
        sum_k += k;
        sum_k2 += k * k;
    }
    const double mean_k = sum_k / n;
    const double mean_k2 = sum_k2 / n;
    if (mean_k2 <= mean_k)
        throw std::domain_error("epidemic threshold undefined: <k^2> <= <k>");
    return mean_k / (mean_k2 - mean_k);
}

MonteCarloResult monte_carlo(const Graph& g, const SimParams& params,
                             std::size_t replicas, std::size_t threads) {
    if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, replicas);

    std::vector<SimTrace> traces(replicas);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SimParams p = params;
            p.rng_seed = splitmix64(params.rng_seed) ^ (i + 1);
            traces[i] = simulate(g, p);
        }
    };
    if (threads == 1) {
        worker(0, replicas);
    } else {
        std::vector<std::future<void>> jobs;
        const std::size_t chunk = (replicas + threads - 1) / threads;
        for (std::size_t begin = 0; begin < replicas; begin += chunk)
            jobs.push_back(std::async(std::launch::async, worker, begin,
                                      std::min(begin + chunk, replicas)));
        for (auto& j : jobs) j.get();
    }

    const double n = static_cast<double>(g.node_count());
    std::size_t max_len = 0;
    for (const auto& t : traces) max_len = std::max(max_len, t.steps());

    MonteCarloResult agg;
    agg.replicas = replicas;
    agg.mean_f.assign(max_len, 0.0);
    agg.std_f.assign(max_len, 0.0);
    // Two passes (mean, then squared deviations) so degenerate spreads
    // report an exact zero.
    const double r = static_cast<double>(replicas);
    std::vector<double> ftc(replicas);
    auto f_at = [&](const SimTrace& t, std::size_t s) {
        const std::size_t idx = std::min(s, t.steps() - 1);  // pad with terminal state
        return static_cast<double>(t.n_i[idx] + t.n_r[idx]) / n;
    };
    for (std::size_t i = 0; i < replicas; ++i) {
        const auto& t = traces[i];
        agg.mu_clamped = agg.mu_clamped || t.mu_clamped;
        for (std::size_t s = 0; s < max_len; ++s) agg.mean_f[s] += f_at(t, s);
        ftc[i] = params.model == Model::Si ? static_cast<double>(t.n_i.back()) / n
                                           : static_cast<double>(t.n_r.back()) / n;
        agg.mean_ftc += ftc[i];
    }
    for (std::size_t s = 0; s < max_len; ++s) agg.mean_f[s] /= r;
    agg.mean_ftc /= r;
    for (std::size_t i = 0; i < replicas; ++i) {
        for (std::size_t s = 0; s < max_len; ++s) {
            const double d = f_at(traces[i], s) - agg.mean_f[s];
            agg.std_f[s] += d * d;
        }
        const double d = ftc[i] - agg.mean_ftc;
        agg.std_ftc += d * d;
    }
    for (std::size_t s = 0; s < max_len; ++s) agg.std_f[s] = std::sqrt(agg.std_f[s] / r);
    agg.std_ftc = std::sqrt(agg.std_ftc / r);
    return agg;
}

void write_trace_csv(const SimTrace& trace, std::size_t n, std::ostream& out) {
    out << "t,n_S,n_I,n_R,F_t\n";
    for (std::size_t t = 0; t < trace.steps(); ++t) {
        out << t << ',' << trace.n_s[t] << ',' << trace.n_i[t] << ',' << trace.n_r[t] << ','
            << static_cast<double>(trace.n_i[t] + trace.n_r[t]) / static_cast<double>(n) << '\n';
    }
}

void write_aggregate_csv(const MonteCarloResult& agg, std::ostream& out) {
    out << "t,mean_F,std_F\n";
    for (std::size_t t = 0; t < agg.mean_f.size(); ++t)
        out << t << ',' << agg.mean_f[t] << ',' << agg.std_f[t] << '\n';
}

}  // namespace spreadrank
