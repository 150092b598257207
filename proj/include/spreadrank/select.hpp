#ifndef SPREADRANK_SELECT_HPP
#define SPREADRANK_SELECT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spreadrank/graph.hpp"

namespace spreadrank {

struct VoteRankParams {
    std::size_t r = 1;
    double alpha = 0.0;            // initial ability k_i^alpha (0^0 = 1)
    std::optional<double> f;       // constant decreasing factor; unset: k_i^alpha / <k>
    bool non_adjacent = false;     // forbid adjacent spreaders
    bool pad = false;              // keep electing zero-score nodes by tie-break
};

struct SpreaderSet {
    std::vector<NodeId> nodes;     // election order
    std::vector<double> scores;    // winning score per election
    std::string method;
    std::string params;
    bool exhausted = false;        // candidate pool ran out before r winners
    bool clamped_f = false;        // some f_i fell outside [0,1] and was clamped

    std::size_t size() const { return nodes.size(); }
};

/// Prefer a over b when scores tie. Must be a strict deterministic order.
using TieBreak = std::function<bool(NodeId, NodeId)>;

inline bool smallest_id_tie_break(NodeId a, NodeId b) { return a < b; }

/// Election bookkeeping: one (score, ability) tuple per node, plus the
/// per-node decrement applied when the node's vote elects a winner.
struct VoteState {
    std::vector<double> ability;
    std::vector<double> score;
    std::vector<double> penalty;   // f_i
    std::vector<char> elected;
    bool clamped_f = false;
};

VoteState init_vote_state(const Graph& g, const VoteRankParams& params);

/// Marks the winner elected, zeroes its ability, decrements its voters'
/// abilities (floored at zero) and refreshes the scores that can change:
/// nodes within distance 2 of the winner. Returns the refreshed node ids
/// (winner included).
std::vector<NodeId> update_after_election(VoteState& state, NodeId winner, const Graph& g);

SpreaderSet voterank(const Graph& g, const VoteRankParams& params,
                     TieBreak tie_break = smallest_id_tie_break);

/// voterank with the non-adjacency constraint forced on.
SpreaderSet voterank_non_adjacent(const Graph& g, VoteRankParams params,
                                  TieBreak tie_break = smallest_id_tie_break);

void write_spreaders_csv(const SpreaderSet& s, const Graph& g, std::ostream& out);

}  // namespace spreadrank

#endif
