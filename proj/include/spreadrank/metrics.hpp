#ifndef SPREADRANK_METRICS_HPP
#define SPREADRANK_METRICS_HPP

#include <vector>

#include "spreadrank/epidemic.hpp"
#include "spreadrank/graph.hpp"
#include "spreadrank/select.hpp"

namespace spreadrank {

/// F(t) = (n_I(t) + n_R(t)) / n per recorded step.
std::vector<double> infected_scale(const SimTrace& trace, std::size_t n);

/// F(t_c) = n_R(t_c) / n. SIR traces must be terminated; for SI the
/// infected fraction at the cap is reported instead.
double final_affected_scale(const SimTrace& trace, std::size_t n, Model model);

struct SpreaderDistance {
    double l_s = 0.0;              // mean shortest path over reachable ordered pairs
    std::size_t unreachable_pairs = 0;
};

/// Mean shortest-path length over all ordered pairs of distinct
/// spreaders; unreachable pairs are excluded from the mean and counted.
SpreaderDistance average_spreader_distance(const Graph& g, const SpreaderSet& s);

}  // namespace spreadrank

#endif
