#ifndef SPREADRANK_TEST_ORACLES_HPP
#define SPREADRANK_TEST_ORACLES_HPP

#include <map>
#include <vector>

#include "spreadrank/graph.hpp"
#include "spreadrank/select.hpp"

namespace spreadrank::oracle {

/// Reference VoteRank: recomputes every score from scratch each turn.
SpreaderSet voterank_naive(const Graph& g, const VoteRankParams& params);

/// Reference core decomposition by repeated whole-graph peeling.
std::vector<int> core_numbers_naive(const Graph& g);

/// All-pairs hop counts (kUnreachable where disconnected).
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

/// Gaussian elimination; A is row-major n x n.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b);

/// Dense-solve reference for PageRank with uniform teleport and uniform
/// dangling redistribution.
std::vector<double> pagerank_dense(const Graph& g, double damping);

/// Stationary distribution of the ground-node augmented LeaderRank walk,
/// ground score redistributed equally.
std::vector<double> leaderrank_dense(const Graph& g);

/// Exact expected final recovered count of the synchronous
/// limited-contact SIR process, by enumerating the full Markov chain.
/// Feasible for graphs of a handful of nodes only.
double sir_limited_expected_recovered(const Graph& g, const std::vector<NodeId>& seeds,
                                      double mu, double beta);

}  // namespace spreadrank::oracle

#endif
