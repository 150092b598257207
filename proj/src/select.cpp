#include "spreadrank/select.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace spreadrank {

namespace {

double mean_voting_degree(const Graph& g) {
    // <k> undirected, <k^out> directed
    const double n = static_cast<double>(g.node_count());
    const double m = static_cast<double>(g.edge_count());
    return g.directed() ? m / n : 2.0 * m / n;
}

/// Binary max-heap over node ids with a tie-break order. Keys are held
/// inside the heap and re-keyed one node at a time so the structure
/// stays consistent while a batch of scores changes.
class ScoreHeap {
public:
    ScoreHeap(const std::vector<double>& score, TieBreak tie)
        : score_(score), tie_(std::move(tie)), pos_(score.size(), -1) {
        heap_.reserve(score.size());
        key_ = score;
        for (NodeId u = 0; static_cast<std::size_t>(u) < score.size(); ++u) {
            pos_[static_cast<std::size_t>(u)] = static_cast<int>(heap_.size());
            heap_.push_back(u);
        }
        for (int i = static_cast<int>(heap_.size()) / 2 - 1; i >= 0; --i) sift_down(i);
    }

    bool empty() const { return heap_.empty(); }
    NodeId top() const { return heap_.front(); }
    bool contains(NodeId u) const { return pos_[static_cast<std::size_t>(u)] >= 0; }

    void remove(NodeId u) {
        int i = pos_[static_cast<std::size_t>(u)];
        if (i < 0) return;
        pos_[static_cast<std::size_t>(u)] = -1;
        NodeId last = heap_.back();
        heap_.pop_back();
        if (i < static_cast<int>(heap_.size())) {
            heap_[static_cast<std::size_t>(i)] = last;
            pos_[static_cast<std::size_t>(last)] = i;
            sift_down(sift_up(i));
        }
    }

    /// Pulls the node's current score into the heap key and restores order.
    void update(NodeId u) {
        const int i = pos_[static_cast<std::size_t>(u)];
        if (i < 0) return;
        key_[static_cast<std::size_t>(u)] = score_[static_cast<std::size_t>(u)];
        sift_down(sift_up(i));
    }

private:
    bool better(NodeId a, NodeId b) const {
        const double sa = key_[static_cast<std::size_t>(a)];
        const double sb = key_[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return tie_(a, b);
    }

    int sift_up(int i) {
        while (i > 0) {
            int parent = (i - 1) / 2;
            if (!better(heap_[static_cast<std::size_t>(i)], heap_[static_cast<std::size_t>(parent)])) break;
            swap_at(i, parent);
            i = parent;
        }
        return i;
    }

    void sift_down(int i) {
        const int size = static_cast<int>(heap_.size());
        for (;;) {
            int best = i;
            for (int c = 2 * i + 1; c <= 2 * i + 2 && c < size; ++c) {
                if (better(heap_[static_cast<std::size_t>(c)], heap_[static_cast<std::size_t>(best)])) best = c;
            }
            if (best == i) return;
            swap_at(i, best);
            i = best;
        }
    }

    void swap_at(int i, int j) {
        std::swap(heap_[static_cast<std::size_t>(i)], heap_[static_cast<std::size_t>(j)]);
        pos_[static_cast<std::size_t>(heap_[static_cast<std::size_t>(i)])] = i;
        pos_[static_cast<std::size_t>(heap_[static_cast<std::size_t>(j)])] = j;
    }

    const std::vector<double>& score_;
    std::vector<double> key_;
    TieBreak tie_;
    std::vector<int> pos_;
    std::vector<NodeId> heap_;
};

double recompute_score(const VoteState& state, NodeId u, const Graph& g) {
    if (state.elected[static_cast<std::size_t>(u)]) return 0.0;
    double s = 0.0;
    for (NodeId v : g.neighbors(u)) s += state.ability[static_cast<std::size_t>(v)];
    return s;
}

std::string params_string(const VoteRankParams& p) {
    std::ostringstream os;
    os << "r=" << p.r << " alpha=" << p.alpha;
    if (p.f) os << " f=" << *p.f;
    else os << " f=k^alpha/<k>";
    if (p.non_adjacent) os << " non-adjacent";
    return os.str();
}

}  // namespace

VoteState init_vote_state(const Graph& g, const VoteRankParams& params) {
    const std::size_t n = g.node_count();
    if (params.r < 1 || params.r > n)
        throw std::invalid_argument("r must be in [1, n]");
    if (params.alpha < 0.0 || params.alpha > 1.0)
        throw std::invalid_argument("alpha must be in [0, 1]");
    if (params.f && (*params.f < 0.0 || *params.f > 1.0))
        throw std::invalid_argument("f must be in [0, 1]");

    VoteState state;
    state.ability.resize(n);
    state.penalty.resize(n);
    state.score.resize(n);
    state.elected.assign(n, 0);

    const double mean_k = mean_voting_degree(g);
    for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
        const auto i = static_cast<std::size_t>(u);
        const double k = static_cast<double>(g.degree(u));
        state.ability[i] = std::pow(k, params.alpha);  // pow(0,0) == 1
        double f = params.f ? *params.f
                            : (mean_k > 0.0 ? state.ability[i] / mean_k : 1.0);
        if (f > 1.0 || f < 0.0 || mean_k == 0.0) {
            f = std::clamp(f, 0.0, 1.0);
            state.clamped_f = true;
        }
        state.penalty[i] = f;
    }
    if (params.alpha == 0.0) {
        // Every ability starts at exactly 1, so the initial sum over a
        // node's voters is exactly its (out-)degree; summing the ones
        // would produce the same doubles at m times the cost.
        for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u)
            state.score[static_cast<std::size_t>(u)] = static_cast<double>(g.degree(u));
    } else {
        for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u)
            state.score[static_cast<std::size_t>(u)] = recompute_score(state, u, g);
    }
    return state;
}

namespace {

/// Marks the winner elected and applies the voting-ability decrements.
/// Returns the nodes whose score sums may have changed: the winner plus
/// every in-neighbor of a node whose ability moved, all within distance
/// 2 of the winner. Scores themselves are not recomputed here.
std::vector<NodeId> apply_election(VoteState& state, NodeId winner, const Graph& g) {
    g.check_node(winner);
    const auto w = static_cast<std::size_t>(winner);
    if (state.elected[w]) throw std::logic_error("node already elected");

    state.elected[w] = 1;
    std::vector<NodeId> changed;
    if (state.ability[w] > 0.0) changed.push_back(winner);
    state.ability[w] = 0.0;

    // Voters of the winner: its (out-)neighbors.
    for (NodeId v : g.neighbors(winner)) {
        const auto i = static_cast<std::size_t>(v);
        if (state.ability[i] > 0.0 && state.penalty[i] > 0.0) {
            state.ability[i] = std::max(0.0, state.ability[i] - state.penalty[i]);
            changed.push_back(v);
        }
    }

    // The affected set is small (~degree^2), so dedup by sorting
    // instead of an O(n) seen array.
    std::vector<NodeId> affected{winner};
    for (NodeId x : changed)
        for (NodeId u : g.in_neighbors(x)) affected.push_back(u);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    return affected;
}

}  // namespace

std::vector<NodeId> update_after_election(VoteState& state, NodeId winner, const Graph& g) {
    std::vector<NodeId> affected = apply_election(state, winner, g);
    // Recomputed in full so results do not depend on the update history.
    for (NodeId u : affected)
        state.score[static_cast<std::size_t>(u)] = recompute_score(state, u, g);
    return affected;
}

SpreaderSet voterank(const Graph& g, const VoteRankParams& params, TieBreak tie_break) {
    VoteState state = init_vote_state(g, params);

    SpreaderSet result;
    result.method = params.non_adjacent ? "voterank-non" : "voterank";
    result.params = params_string(params);
    result.clamped_f = state.clamped_f;
    result.nodes.reserve(params.r);

    ScoreHeap heap(state.score, tie_break);
    std::vector<char> blocked(g.node_count(), 0);
    // Scores only ever fall, so a stale heap key is an upper bound and
    // affected nodes can be recomputed lazily, only if they surface at
    // the top. Once the top's key is fresh it is the exact argmax.
    std::vector<char> dirty(g.node_count(), 0);

    while (result.size() < params.r) {
        while (!heap.empty()) {
            const NodeId t = heap.top();
            if (!dirty[static_cast<std::size_t>(t)]) break;
            state.score[static_cast<std::size_t>(t)] = recompute_score(state, t, g);
            dirty[static_cast<std::size_t>(t)] = 0;
            heap.update(t);
        }
        if (heap.empty()) {
            result.exhausted = true;
            break;
        }
        const NodeId candidate = heap.top();
        if (params.non_adjacent && blocked[static_cast<std::size_t>(candidate)]) {
            heap.remove(candidate);
            continue;
        }
        if (state.score[static_cast<std::size_t>(candidate)] == 0.0 && !params.pad) {
            result.exhausted = true;
            break;
        }

        result.nodes.push_back(candidate);
        result.scores.push_back(state.score[static_cast<std::size_t>(candidate)]);
        heap.remove(candidate);
        for (NodeId u : apply_election(state, candidate, g))
            dirty[static_cast<std::size_t>(u)] = 1;
        if (params.non_adjacent) {
            for (NodeId v : g.neighbors(candidate)) blocked[static_cast<std::size_t>(v)] = 1;
            for (NodeId v : g.in_neighbors(candidate)) blocked[static_cast<std::size_t>(v)] = 1;
        }
    }
    return result;
}

SpreaderSet voterank_non_adjacent(const Graph& g, VoteRankParams params, TieBreak tie_break) {
    params.non_adjacent = true;
    return voterank(g, params, std::move(tie_break));
}

void write_spreaders_csv(const SpreaderSet& s, const Graph& g, std::ostream& out) {
    out << "rank,node_label,score_at_election\n";
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
        out << (i + 1) << ',' << g.label(s.nodes[i]) << ',' << s.scores[i] << '\n';
}

}  // namespace spreadrank
