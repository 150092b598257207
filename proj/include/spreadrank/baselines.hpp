#ifndef SPREADRANK_BASELINES_HPP
#define SPREADRANK_BASELINES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "spreadrank/graph.hpp"
#include "spreadrank/select.hpp"

namespace spreadrank {

struct RankedList {
    std::vector<NodeId> nodes;     // descending score, ties by smallest id
    std::vector<double> scores;    // aligned with nodes
    std::string method;
    bool converged = true;         // power iterations only
};

class UnsupportedMethodError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// score = degree (undirected) or in-degree (directed); out-degree when
/// use_out_degree is set.
RankedList degree_rank(const Graph& g, bool use_out_degree = false);

/// Core decomposition; score = shell index, ties by degree then id.
/// Undirected only.
RankedList kshell_rank(const Graph& g);

SpreaderSet kshell_rank_non(const Graph& g, std::size_t r);

RankedList pagerank(const Graph& g, double damping = 0.85, double epsilon = 1e-10,
                    std::size_t max_iters = 200);

/// Random walk with a ground node bidirectionally linked to every node;
/// ground score redistributed equally at the end. Directed graphs.
RankedList leaderrank(const Graph& g, double epsilon = 1e-10, std::size_t max_iters = 1000);

/// score_i = 10^(-c_i) * sum over out-neighbors j of (k_j^out + 1).
RankedList clusterrank(const Graph& g);

/// score_i = largest h with at least h neighbors of degree >= h. Undirected only.
RankedList h_index_rank(const Graph& g);

/// CI_l(i) = (k_i - 1) * sum over the BFS frontier at exactly distance l
/// of (k_j - 1). Undirected only.
RankedList collective_influence(const Graph& g, int radius = 2);

SpreaderSet top_r(const RankedList& ranked, std::size_t r);

/// Local clustering coefficient of one node on the undirected skeleton.
double local_clustering(const Graph& g, NodeId u);

/// Core number per node (undirected).
std::vector<int> core_numbers(const Graph& g);

void write_ranked_csv(const RankedList& ranked, const Graph& g, std::ostream& out);

}  // namespace spreadrank

#endif
