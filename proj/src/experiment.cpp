#include "spreadrank/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spreadrank/baselines.hpp"
#include "spreadrank/generate.hpp"
#include "spreadrank/metrics.hpp"

namespace spreadrank {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("bad boolean for " + key + ": " + v);
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::size_t spreader_count_from_ratio(double p, std::size_t n) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("p must be in (0, 1]");
    const auto r = static_cast<std::size_t>(std::llround(p * static_cast<double>(n)));
    return std::max<std::size_t>(1, std::min(r, n));
}

ExperimentSpec parse_experiment_spec(std::istream& in, const std::string& origin) {
    ExperimentSpec spec;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "dataset") spec.dataset = value;
        else if (key == "generate") spec.generate = value;
        else if (key == "directed") spec.directed = parse_bool(value, key);
        else if (key == "methods") spec.methods = split_list(value);
        else if (key == "sweep") spec.sweep = value;
        else if (key == "values") {
            for (const auto& v : split_list(value)) spec.values.push_back(std::stod(v));
        }
        else if (key == "p") spec.p = std::stod(value);
        else if (key == "lambda") spec.lambda = std::stod(value);
        else if (key == "beta") { if (value != "auto") spec.beta = std::stod(value); }
        else if (key == "f") { if (value != "auto") spec.f = std::stod(value); }
        else if (key == "alpha") spec.alpha = std::stod(value);
        else if (key == "model") spec.model = parse_model(value);
        else if (key == "replicas") spec.replicas = std::stoul(value);
        else if (key == "seed") spec.seed = std::stoull(value);
        else if (key == "compute_ls") spec.compute_ls = parse_bool(value, key);
        else if (key == "max_steps") spec.max_steps = std::stoul(value);
        else if (key == "out") spec.out = value;
        else throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                         ": unknown key " + key);
    }
    if (spec.methods.empty())
        throw std::invalid_argument(origin + ": no methods listed");
    if (spec.sweep != "none" && spec.values.empty())
        throw std::invalid_argument(origin + ": sweep declared but no values");
    if (spec.replicas < 1) throw std::invalid_argument(origin + ": replicas must be >= 1");
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open experiment spec: " + path);
    return parse_experiment_spec(in, path);
}

Graph load_experiment_graph(const ExperimentSpec& spec) {
    if (!spec.generate.empty()) {
        std::istringstream in(spec.generate);
        std::string kind;
        in >> kind;
        if (kind == "ba") {
            std::size_t n, attach;
            std::uint64_t seed = 0;
            if (!(in >> n >> attach)) throw std::invalid_argument("generate ba needs: n attach [seed]");
            in >> seed;
            return generate_ba(n, attach, seed);
        }
        if (kind == "er") {
            std::size_t n, m;
            std::uint64_t seed = 0;
            if (!(in >> n >> m)) throw std::invalid_argument("generate er needs: n m [seed]");
            in >> seed;
            return generate_er(n, m, seed, spec.directed);
        }
        throw std::invalid_argument("unknown generator: " + kind);
    }
    if (spec.dataset.empty()) throw std::invalid_argument("spec names neither dataset nor generate");
    return load_edge_list(spec.dataset, spec.directed);
}

const std::vector<std::string>& method_registry() {
    static const std::vector<std::string> names = {
        "voterank", "voterank-non", "degree",   "outdegree",  "kshell", "kshell-non",
        "pagerank", "leaderrank",   "clusterrank", "hindex",  "ci2",
    };
    return names;
}

SpreaderSet select_spreaders(const Graph& g, const std::string& method, std::size_t r,
                             std::optional<double> f, double alpha) {
    if (method == "voterank" || method == "voterank-non") {
        VoteRankParams params;
        params.r = r;
        params.f = f;
        params.alpha = alpha;
        params.non_adjacent = method == "voterank-non";
        params.pad = true;  // always deliver r seeds when possible
        return voterank(g, params);
    }
    if (method == "kshell-non") return kshell_rank_non(g, r);
    if (method == "degree") return top_r(degree_rank(g), r);
    if (method == "outdegree") return top_r(degree_rank(g, true), r);
    if (method == "kshell") return top_r(kshell_rank(g), r);
    if (method == "pagerank") return top_r(pagerank(g), r);
    if (method == "leaderrank") return top_r(leaderrank(g), r);
    if (method == "clusterrank") return top_r(clusterrank(g), r);
    if (method == "hindex") return top_r(h_index_rank(g), r);
    if (method == "ci2") return top_r(collective_influence(g, 2), r);
    throw UnsupportedMethodError("unknown method: " + method);
}

void run_experiment(const ExperimentSpec& spec, const Graph& g, std::ostream& csv) {
    const std::size_t n = g.node_count();
    const GraphStats stats = compute_stats(g);
    const double default_beta = stats.mean_degree > 0.0 ? 1.0 / stats.mean_degree : 1.0;

    csv << "method,sweep,value,p,r,lambda,beta,f,alpha,model,replicas,"
           "F_tc_mean,F_tc_std,L_s,unreachable_pairs,error\n";

    std::vector<double> values = spec.values;
    if (spec.sweep == "none") values = {0.0};

    std::size_t cell = 0;
    for (double value : values) {
        for (const auto& method : spec.methods) {
            double p = spec.p;
            double lambda = spec.lambda;
            double beta = spec.beta.value_or(default_beta);
            std::optional<double> f = spec.f;
            double alpha = spec.alpha;
            std::size_t r = 0;

            std::string error;
            double ftc_mean = 0.0, ftc_std = 0.0, ls = 0.0;
            std::size_t unreachable = 0;
            try {
                if (spec.sweep == "p") p = value;
                else if (spec.sweep == "lambda") lambda = value;
                else if (spec.sweep == "f") f = value;
                else if (spec.sweep == "alpha") alpha = value;
                else if (spec.sweep == "r") r = static_cast<std::size_t>(value);
                else if (spec.sweep != "none")
                    throw std::invalid_argument("unknown sweep variable: " + spec.sweep);
                if (r == 0) r = spreader_count_from_ratio(p, n);

                SpreaderSet seeds = select_spreaders(g, method, r, f, alpha);
                SimParams sim;
                sim.model = spec.model;
                sim.beta = beta;
                sim.mu = lambda * beta;
                sim.seeds = seeds.nodes;
                sim.max_steps = spec.max_steps;
                sim.rng_seed = mix(spec.seed) ^ mix(cell + 1);
                auto agg = monte_carlo(g, sim, spec.replicas);
                ftc_mean = agg.mean_ftc;
                ftc_std = agg.std_ftc;
                if (spec.compute_ls && seeds.size() >= 2) {
                    auto d = average_spreader_distance(g, seeds);
                    ls = d.l_s;
                    unreachable = d.unreachable_pairs;
                }
            } catch (const std::exception& e) {
                error = e.what();
                std::replace(error.begin(), error.end(), ',', ';');
            }

            csv << method << ',' << spec.sweep << ',' << value << ',' << p << ',' << r << ','
                << lambda << ',' << beta << ',' << (f ? std::to_string(*f) : "auto") << ','
                << alpha << ',' << model_name(spec.model) << ',' << spec.replicas << ','
                << ftc_mean << ',' << ftc_std << ',' << ls << ',' << unreachable << ','
                << error << '\n';
            ++cell;
        }
    }
}

}  // namespace spreadrank
