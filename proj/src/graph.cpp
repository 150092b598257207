#include "spreadrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace spreadrank {

Graph::Graph(bool directed,
             std::vector<std::vector<NodeId>> adjacency,
             std::vector<std::vector<NodeId>> reverse_adjacency,
             std::vector<std::string> labels,
             std::size_t edge_count)
    : directed_(directed),
      edge_count_(edge_count),
      adjacency_(std::move(adjacency)),
      reverse_adjacency_(std::move(reverse_adjacency)),
      labels_(std::move(labels)) {
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    for (auto& nbrs : reverse_adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

namespace {

struct EdgeHash {
    std::size_t operator()(const std::pair<NodeId, NodeId>& e) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.first)) << 32) |
            static_cast<std::uint32_t>(e.second));
    }
};

Graph build(bool directed,
            std::size_t n,
            std::vector<std::pair<NodeId, NodeId>>&& raw_edges,
            std::vector<std::string>&& labels) {
    if (n == 0) throw GraphError("empty graph: no nodes found");

    std::unordered_set<std::pair<NodeId, NodeId>, EdgeHash> seen;
    seen.reserve(raw_edges.size() * 2);
    std::vector<std::vector<NodeId>> adj(n);
    std::vector<std::vector<NodeId>> radj(directed ? n : 0);
    std::size_t m = 0;

    for (auto [u, v] : raw_edges) {
        if (u == v) continue;  // self-loop
        auto key = (!directed && u > v) ? std::make_pair(v, u) : std::make_pair(u, v);
        if (!seen.insert(key).second) continue;  // duplicate
        adj[static_cast<std::size_t>(u)].push_back(v);
        if (directed) {
            radj[static_cast<std::size_t>(v)].push_back(u);
        } else {
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        ++m;
    }
    return Graph(directed, std::move(adj), std::move(radj), std::move(labels), m);
}

Graph parse_stream(std::istream& in, bool directed, const std::string& origin) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw GraphError(origin + ":" + std::to_string(lineno) +
                             ": expected two whitespace-separated node labels");
        }
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        edges.emplace_back(u, v);
    }
    return build(directed, labels.size(), std::move(edges), std::move(labels));
}

}  // namespace

Graph load_edge_list(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open edge list: " + path);
    return parse_stream(in, directed, path);
}

Graph parse_edge_list(const std::string& text, bool directed, const std::string& origin) {
    std::istringstream in(text);
    return parse_stream(in, directed, origin);
}

Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                 bool directed) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    auto copy = edges;
    return build(directed, n, std::move(copy), std::move(labels));
}

GraphStats compute_stats(const Graph& g) {
    const std::size_t n = g.node_count();
    GraphStats st;
    st.n = n;
    st.m = g.edge_count();

    double sum_k = 0.0, sum_k2 = 0.0;
    for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
        const double k = static_cast<double>(g.degree(u));
        sum_k += k;
        sum_k2 += k * k;
        st.max_degree = std::max(st.max_degree, g.degree(u));
    }
    st.mean_degree = sum_k / static_cast<double>(n);
    st.heterogeneity = sum_k > 0.0
                           ? (sum_k2 / static_cast<double>(n)) / (st.mean_degree * st.mean_degree)
                           : std::numeric_limits<double>::quiet_NaN();

    // Local clustering over the undirected skeleton; degree <= 1 nodes count as 0.
    double c_sum = 0.0;
    std::vector<std::vector<NodeId>> und(n);
    for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
        for (NodeId v : g.neighbors(u)) {
            und[static_cast<std::size_t>(u)].push_back(v);
            if (g.directed()) und[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    for (auto& nbrs : und) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    for (std::size_t u = 0; u < n; ++u) {
        const auto& nu = und[u];
        const std::size_t k = nu.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& ni = und[static_cast<std::size_t>(nu[i])];
            for (std::size_t j = i + 1; j < k; ++j) {
                if (std::binary_search(ni.begin(), ni.end(), nu[j])) ++links;
            }
        }
        c_sum += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    st.mean_clustering = c_sum / static_cast<double>(n);
    return st;
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
    g.check_node(source);
    std::vector<int> dist(g.node_count(), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<NodeId> queue{source};
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        const int du = dist[static_cast<std::size_t>(u)];
        for (NodeId v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int shortest_path_length(const Graph& g, NodeId u, NodeId v) {
    g.check_node(u);
    g.check_node(v);
    std::vector<int> dist(g.node_count(), kUnreachable);
    dist[static_cast<std::size_t>(u)] = 0;
    std::deque<NodeId> queue{u};
    while (!queue.empty()) {
        NodeId x = queue.front();
        queue.pop_front();
        if (x == v) return dist[static_cast<std::size_t>(x)];
        const int dx = dist[static_cast<std::size_t>(x)];
        for (NodeId y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
                dist[static_cast<std::size_t>(y)] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    return kUnreachable;
}

}  // namespace spreadrank
