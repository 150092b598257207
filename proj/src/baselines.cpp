#include "spreadrank/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace spreadrank {

namespace {

RankedList from_scores(std::vector<double> scores, std::string method) {
    RankedList r;
    r.nodes.resize(scores.size());
    std::iota(r.nodes.begin(), r.nodes.end(), 0);
    std::sort(r.nodes.begin(), r.nodes.end(), [&](NodeId a, NodeId b) {
        const double sa = scores[static_cast<std::size_t>(a)];
        const double sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return a < b;
    });
    r.scores.resize(scores.size());
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        r.scores[i] = scores[static_cast<std::size_t>(r.nodes[i])];
    r.method = std::move(method);
    return r;
}

void require_undirected(const Graph& g, const char* method) {
    if (g.directed())
        throw UnsupportedMethodError(std::string(method) + " supports undirected graphs only");
}

void require_directed(const Graph& g, const char* method) {
    if (!g.directed())
        throw UnsupportedMethodError(std::string(method) + " supports directed graphs only");
}

}  // namespace

RankedList degree_rank(const Graph& g, bool use_out_degree) {
    std::vector<double> scores(g.node_count());
    for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u) {
        const std::size_t k = (g.directed() && !use_out_degree) ? g.in_degree(u) : g.degree(u);
        scores[static_cast<std::size_t>(u)] = static_cast<double>(k);
    }
    return from_scores(std::move(scores), g.directed() && !use_out_degree ? "indegree" : "degree");
}

std::vector<int> core_numbers(const Graph& g) {
    require_undirected(g, "k-shell");
    const std::size_t n = g.node_count();
    // Bucket-based peel: process nodes in nondecreasing current degree.
    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (std::size_t u = 0; u < n; ++u) {
        deg[u] = g.degree(static_cast<NodeId>(u));
        max_deg = std::max(max_deg, deg[u]);
    }
    std::vector<std::size_t> bucket_start(max_deg + 2, 0);
    for (std::size_t u = 0; u < n; ++u) ++bucket_start[deg[u] + 1];
    for (std::size_t d = 1; d < bucket_start.size(); ++d) bucket_start[d] += bucket_start[d - 1];
    std::vector<NodeId> order(n);
    std::vector<std::size_t> pos(n);
    {
        auto cursor = bucket_start;
        for (std::size_t u = 0; u < n; ++u) {
            pos[u] = cursor[deg[u]]++;
            order[pos[u]] = static_cast<NodeId>(u);
        }
    }
    std::vector<int> core(n);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeId u = order[i];
        core[static_cast<std::size_t>(u)] = static_cast<int>(deg[static_cast<std::size_t>(u)]);
        for (NodeId v : g.neighbors(u)) {
            const auto vi = static_cast<std::size_t>(v);
            if (deg[vi] > deg[static_cast<std::size_t>(u)]) {
                // Move v one bucket down: swap it to the front of its bucket.
                const std::size_t bucket_front = bucket_start[deg[vi]];
                const NodeId front_node = order[bucket_front];
                std::swap(order[pos[vi]], order[bucket_front]);
                std::swap(pos[vi], pos[static_cast<std::size_t>(front_node)]);
                ++bucket_start[deg[vi]];
                --deg[vi];
            }
        }
    }
    return core;
}

RankedList kshell_rank(const Graph& g) {
    auto core = core_numbers(g);
    RankedList r;
    r.nodes.resize(g.node_count());
    std::iota(r.nodes.begin(), r.nodes.end(), 0);
    // Within a shell: degree descending, then id.
    std::sort(r.nodes.begin(), r.nodes.end(), [&](NodeId a, NodeId b) {
        const int ca = core[static_cast<std::size_t>(a)];
        const int cb = core[static_cast<std::size_t>(b)];
        if (ca != cb) return ca > cb;
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    r.scores.resize(r.nodes.size());
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        r.scores[i] = static_cast<double>(core[static_cast<std::size_t>(r.nodes[i])]);
    r.method = "kshell";
    return r;
}

SpreaderSet kshell_rank_non(const Graph& g, std::size_t r) {
    auto ranked = kshell_rank(g);
    SpreaderSet out;
    out.method = "kshell-non";
    out.params = "r=" + std::to_string(r);
    if (r > g.node_count()) throw std::invalid_argument("r exceeds node count");
    std::vector<char> blocked(g.node_count(), 0);
    for (std::size_t i = 0; i < ranked.nodes.size() && out.size() < r; ++i) {
        const NodeId u = ranked.nodes[i];
        if (blocked[static_cast<std::size_t>(u)]) continue;
        out.nodes.push_back(u);
        out.scores.push_back(ranked.scores[i]);
        for (NodeId v : g.neighbors(u)) blocked[static_cast<std::size_t>(v)] = 1;
    }
    out.exhausted = out.size() < r;
    return out;
}

RankedList pagerank(const Graph& g, double damping, double epsilon, std::size_t max_iters) {
    require_directed(g, "pagerank");
    const std::size_t n = g.node_count();
    std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);
    bool converged = false;
    for (std::size_t it = 0; it < max_iters && !converged; ++it) {
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (g.degree(static_cast<NodeId>(u)) == 0) dangling += x[u];
        const double base = (1.0 - damping) / static_cast<double>(n) +
                            damping * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
            const double share = damping * x[static_cast<std::size_t>(u)] /
                                 static_cast<double>(std::max<std::size_t>(g.degree(u), 1));
            if (g.degree(u) == 0) continue;
            for (NodeId v : g.neighbors(u)) next[static_cast<std::size_t>(v)] += share;
        }
        double diff = 0.0;
        for (std::size_t u = 0; u < n; ++u) diff += std::abs(next[u] - x[u]);
        x.swap(next);
        converged = diff < epsilon;
    }
    auto r = from_scores(std::move(x), "pagerank");
    r.converged = converged;
    return r;
}

RankedList leaderrank(const Graph& g, double epsilon, std::size_t max_iters) {
    require_directed(g, "leaderrank");
    const std::size_t n = g.node_count();
    // Augmented walk: ground node linked to and from every node.
    std::vector<double> x(n + 1, 1.0 / static_cast<double>(n + 1)), next(n + 1);
    bool converged = false;
    for (std::size_t it = 0; it < max_iters && !converged; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        const double ground_share = x[n] / static_cast<double>(n);
        for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
            const auto ui = static_cast<std::size_t>(u);
            const double share = x[ui] / static_cast<double>(g.degree(u) + 1);
            for (NodeId v : g.neighbors(u)) next[static_cast<std::size_t>(v)] += share;
            next[n] += share;        // edge to ground
            next[ui] += ground_share;  // edge from ground
        }
        double diff = 0.0;
        for (std::size_t u = 0; u <= n; ++u) diff += std::abs(next[u] - x[u]);
        x.swap(next);
        converged = diff < epsilon;
    }
    const double redistributed = x[n] / static_cast<double>(n);
    std::vector<double> scores(n);
    for (std::size_t u = 0; u < n; ++u) scores[u] = x[u] + redistributed;
    auto r = from_scores(std::move(scores), "leaderrank");
    r.converged = converged;
    return r;
}

double local_clustering(const Graph& g, NodeId u) {
    // Out-neighborhood for directed graphs; counts ordered linked pairs.
    auto nbrs = g.neighbors(u);
    const std::size_t k = nbrs.size();
    if (k < 2) return 0.0;
    std::size_t links = 0;
    for (NodeId a : nbrs)
        for (NodeId b : nbrs)
            if (a != b && g.has_edge(a, b)) ++links;
    if (!g.directed()) links /= 2;
    const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) /
                         (g.directed() ? 1.0 : 2.0);
    return static_cast<double>(links) / pairs;
}

RankedList clusterrank(const Graph& g) {
    std::vector<double> scores(g.node_count(), 0.0);
    for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u) {
        double sum = 0.0;
        for (NodeId v : g.neighbors(u)) sum += static_cast<double>(g.degree(v)) + 1.0;
        scores[static_cast<std::size_t>(u)] = std::pow(10.0, -local_clustering(g, u)) * sum;
    }
    return from_scores(std::move(scores), "clusterrank");
}

RankedList h_index_rank(const Graph& g) {
    require_undirected(g, "h-index");
    std::vector<double> scores(g.node_count());
    std::vector<std::size_t> degs;
    for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u) {
        degs.clear();
        for (NodeId v : g.neighbors(u)) degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end(), std::greater<>());
        std::size_t h = 0;
        while (h < degs.size() && degs[h] >= h + 1) ++h;
        scores[static_cast<std::size_t>(u)] = static_cast<double>(h);
    }
    return from_scores(std::move(scores), "h-index");
}

RankedList collective_influence(const Graph& g, int radius) {
    require_undirected(g, "collective influence");
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    const std::size_t n = g.node_count();
    std::vector<double> scores(n, 0.0);
    std::vector<int> dist(n);
    std::vector<NodeId> queue;
    for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
        if (g.degree(u) == 0) continue;
        std::fill(dist.begin(), dist.end(), kUnreachable);
        queue.assign(1, u);
        dist[static_cast<std::size_t>(u)] = 0;
        double frontier_sum = 0.0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId x = queue[head];
            const int dx = dist[static_cast<std::size_t>(x)];
            if (dx == radius) {
                frontier_sum += static_cast<double>(g.degree(x)) - 1.0;
                continue;
            }
            for (NodeId y : g.neighbors(x)) {
                if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
                    dist[static_cast<std::size_t>(y)] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
        scores[static_cast<std::size_t>(u)] =
            (static_cast<double>(g.degree(u)) - 1.0) * frontier_sum;
    }
    return from_scores(std::move(scores), "ci" + std::to_string(radius));
}

SpreaderSet top_r(const RankedList& ranked, std::size_t r) {
    if (r > ranked.nodes.size()) throw std::invalid_argument("r exceeds node count");
    SpreaderSet s;
    s.method = ranked.method;
    s.params = "r=" + std::to_string(r);
    s.nodes.assign(ranked.nodes.begin(), ranked.nodes.begin() + static_cast<std::ptrdiff_t>(r));
    s.scores.assign(ranked.scores.begin(), ranked.scores.begin() + static_cast<std::ptrdiff_t>(r));
    return s;
}

void write_ranked_csv(const RankedList& ranked, const Graph& g, std::ostream& out) {
    out << "rank,node_label,score\n";
    for (std::size_t i = 0; i < ranked.nodes.size(); ++i)
        out << (i + 1) << ',' << g.label(ranked.nodes[i]) << ',' << ranked.scores[i] << '\n';
}

}  // namespace spreadrank
