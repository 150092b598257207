#include "spreadrank/metrics.hpp"

#include <stdexcept>

namespace spreadrank {

std::vector<double> infected_scale(const SimTrace& trace, std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<double> f(trace.steps());
    for (std::size_t t = 0; t < trace.steps(); ++t)
        f[t] = static_cast<double>(trace.n_i[t] + trace.n_r[t]) / static_cast<double>(n);
    return f;
}

double final_affected_scale(const SimTrace& trace, std::size_t n, Model model) {
    if (n < 1 || trace.steps() == 0) throw std::invalid_argument("empty trace");
    if (model == Model::Si)
        return static_cast<double>(trace.n_i.back()) / static_cast<double>(n);
    if (trace.n_i.back() != 0)
        throw std::invalid_argument("SIR trace did not terminate (infected nodes remain)");
    return static_cast<double>(trace.n_r.back()) / static_cast<double>(n);
}

SpreaderDistance average_spreader_distance(const Graph& g, const SpreaderSet& s) {
    if (s.size() < 2) throw std::invalid_argument("need at least two spreaders");
    SpreaderDistance result;
    double sum = 0.0;
    std::size_t reachable = 0;
    for (NodeId u : s.nodes) {
        auto dist = bfs_distances(g, u);
        for (NodeId v : s.nodes) {
            if (u == v) continue;
            const int d = dist[static_cast<std::size_t>(v)];
            if (d == kUnreachable) {
                ++result.unreachable_pairs;
            } else {
                sum += d;
                ++reachable;
            }
        }
    }
    result.l_s = reachable > 0 ? sum / static_cast<double>(reachable) : 0.0;
    return result;
}

}  // namespace spreadrank
