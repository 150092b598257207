#ifndef SPREADRANK_GRAPH_HPP
#define SPREADRANK_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace spreadrank {

using NodeId = std::int32_t;

inline constexpr int kUnreachable = -1;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple graph with dense node ids 0..n-1.
///
/// Undirected graphs store each edge in both endpoint lists. Directed
/// graphs keep a reverse adjacency alongside the forward one. Original
/// file labels are retained for output.
class Graph {
public:
    Graph(bool directed,
          std::vector<std::vector<NodeId>> adjacency,
          std::vector<std::vector<NodeId>> reverse_adjacency,
          std::vector<std::string> labels,
          std::size_t edge_count);

    bool directed() const { return directed_; }
    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    /// Out-neighbors for directed graphs, all neighbors for undirected.
    std::span<const NodeId> neighbors(NodeId u) const {
        check_node(u);
        return adjacency_[static_cast<std::size_t>(u)];
    }
    /// In-neighbors for directed graphs; same as neighbors() when undirected.
    std::span<const NodeId> in_neighbors(NodeId u) const {
        check_node(u);
        if (!directed_) return adjacency_[static_cast<std::size_t>(u)];
        return reverse_adjacency_[static_cast<std::size_t>(u)];
    }

    std::size_t degree(NodeId u) const { return neighbors(u).size(); }
    std::size_t in_degree(NodeId u) const { return in_neighbors(u).size(); }

    const std::string& label(NodeId u) const {
        check_node(u);
        return labels_[static_cast<std::size_t>(u)];
    }

    bool has_edge(NodeId u, NodeId v) const;

    void check_node(NodeId u) const {
        if (u < 0 || static_cast<std::size_t>(u) >= adjacency_.size())
            throw std::invalid_argument("invalid node id " + std::to_string(u));
    }

private:
    bool directed_;
    std::size_t edge_count_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::vector<NodeId>> reverse_adjacency_;  // directed only
    std::vector<std::string> labels_;
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    double mean_degree = 0.0;      // mean out-degree when directed
    std::size_t max_degree = 0;    // max out-degree when directed
    double mean_clustering = 0.0;
    double heterogeneity = 0.0;    // <k^2>/<k>^2; NaN sentinel when <k> = 0
};

/// Parses a whitespace-separated edge list. '#' lines are comments.
/// Self-loops and duplicate edges are dropped; for undirected input
/// (u,v) and (v,u) count as one edge. Node ids are assigned densely in
/// order of first appearance.
Graph load_edge_list(const std::string& path, bool directed);

/// Same parser over an in-memory string (used by tests and generators).
Graph parse_edge_list(const std::string& text, bool directed,
                      const std::string& origin = "<string>");

/// Builds a graph directly from an edge set; labels default to the
/// decimal node index. Applies the same dedup/self-loop rules as loading.
Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                 bool directed);

GraphStats compute_stats(const Graph& g);

/// BFS hop count from u to v along out-edges; kUnreachable if no path.
int shortest_path_length(const Graph& g, NodeId u, NodeId v);

/// BFS distances from source to every node (kUnreachable where no path).
std::vector<int> bfs_distances(const Graph& g, NodeId source);

}  // namespace spreadrank

#endif
