#include "spreadrank/generate.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace spreadrank {

Graph generate_er(std::size_t n, std::size_t m, std::uint64_t seed, bool directed) {
    if (n < 2) throw std::invalid_argument("need at least 2 nodes");
    const double max_edges =
        static_cast<double>(n) * static_cast<double>(n - 1) / (directed ? 1.0 : 2.0);
    if (static_cast<double>(m) > max_edges) throw std::invalid_argument("too many edges");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        NodeId u = pick(rng), v = pick(rng);
        if (u == v) continue;
        NodeId a = u, b = v;
        if (!directed && a > b) std::swap(a, b);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
            static_cast<std::uint32_t>(b);
        if (seen.insert(key).second) edges.emplace_back(u, v);
    }
    return make_graph(n, edges, directed);
}

Graph generate_ba(std::size_t n, std::size_t attach, std::uint64_t seed) {
    if (attach < 1 || n <= attach) throw std::invalid_argument("need n > attach >= 1");
    std::mt19937_64 rng(seed);

    // Targets drawn from a repeated-endpoint list: degree-proportional.
    std::vector<NodeId> endpoints;
    std::vector<std::pair<NodeId, NodeId>> edges;
    // Seed clique over the first attach+1 nodes.
    for (std::size_t u = 0; u <= attach; ++u) {
        for (std::size_t v = u + 1; v <= attach; ++v) {
            edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
            endpoints.push_back(static_cast<NodeId>(u));
            endpoints.push_back(static_cast<NodeId>(v));
        }
    }
    std::vector<NodeId> targets;
    for (std::size_t u = attach + 1; u < n; ++u) {
        targets.clear();
        while (targets.size() < attach) {
            const NodeId t = endpoints[std::uniform_int_distribution<std::size_t>(
                0, endpoints.size() - 1)(rng)];
            bool dup = false;
            for (NodeId x : targets) dup = dup || (x == t);
            if (!dup) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(static_cast<NodeId>(u), t);
            endpoints.push_back(static_cast<NodeId>(u));
            endpoints.push_back(t);
        }
    }
    return make_graph(n, edges, false);
}

}  // namespace spreadrank
