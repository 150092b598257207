#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "spreadrank/generate.hpp"
#include "spreadrank/select.hpp"

using namespace spreadrank;

namespace {

Graph star6() {
    // Center 0, leaves 1..5.
    return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, false);
}

// Ten nodes, twelve edges, <k> = 2.4. Node 0 is a five-neighbor hub;
// node 7 touches exactly one of its neighbors, so after the first
// election its score is 2 + (1 - 1/2.4).
Graph toy10() {
    return make_graph(10,
                      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                       {7, 5}, {7, 6}, {7, 8},
                       {6, 9}, {8, 9}, {1, 2}, {3, 4}},
                      false);
}

}  // namespace

TEST_CASE("star elects the center with score 5") {
    auto s = voterank(star6(), {.r = 1});
    REQUIRE(s.size() == 1);
    CHECK(s.nodes[0] == 0);
    CHECK(s.scores[0] == doctest::Approx(5.0));
}

TEST_CASE("toy network: decrement 1/2.4 and second winner 7") {
    Graph g = toy10();
    REQUIRE(compute_stats(g).mean_degree == doctest::Approx(2.4));

    VoteRankParams params{.r = 2};
    VoteState state = init_vote_state(g, params);
    CHECK(state.penalty[1] == doctest::Approx(1.0 / 2.4).epsilon(1e-12));
    CHECK(state.score[0] == doctest::Approx(5.0));

    update_after_election(state, 0, g);
    CHECK(state.ability[0] == 0.0);
    for (NodeId v : {1, 2, 3, 4, 5})
        CHECK(state.ability[static_cast<std::size_t>(v)] ==
              doctest::Approx(1.0 - 1.0 / 2.4).epsilon(1e-12));

    auto s = voterank(g, params);
    REQUIRE(s.size() == 2);
    CHECK(s.nodes[0] == 0);
    CHECK(s.nodes[1] == 7);
    CHECK(s.scores[1] == doctest::Approx(2.0 + 1.0 - 1.0 / 2.4).epsilon(1e-12));
}

TEST_CASE("r = n with padding is a permutation") {
    Graph g = toy10();
    auto s = voterank(g, {.r = 10, .pad = true});
    REQUIRE(s.size() == 10);
    auto sorted = s.nodes;
    std::sort(sorted.begin(), sorted.end());
    for (NodeId u = 0; u < 10; ++u) CHECK(sorted[static_cast<std::size_t>(u)] == u);
}

TEST_CASE("invalid params") {
    CHECK_THROWS_AS(voterank(star6(), {.r = 0}), std::invalid_argument);
    CHECK_THROWS_AS(voterank(star6(), {.r = 7}), std::invalid_argument);
    CHECK_THROWS_AS(voterank(star6(), {.r = 1, .alpha = 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(voterank(star6(), {.r = 1, .f = 1.5}), std::invalid_argument);
}

TEST_CASE("exhaustion without padding stops at zero scores") {
    // After the center is elected every leaf's only voter has ability 0.
    auto s = voterank(star6(), {.r = 3});
    CHECK(s.size() == 1);
    CHECK(s.exhausted);
}

TEST_CASE("update_after_election rejects a double election") {
    Graph g = star6();
    VoteState state = init_vote_state(g, {.r = 2});
    update_after_election(state, 0, g);
    CHECK_THROWS_AS(update_after_election(state, 0, g), std::logic_error);
}

TEST_CASE("ability decrement floors at zero") {
    Graph g = star6();
    VoteState state = init_vote_state(g, {.r = 2, .f = 0.7});
    update_after_election(state, 1, g);  // center voted for leaf 1
    CHECK(state.ability[0] == doctest::Approx(0.3));
    update_after_election(state, 2, g);
    CHECK(state.ability[0] == 0.0);  // 0.3 - 0.7 clamped
}

TEST_CASE("incremental scores equal full recomputation") {
    Graph g = generate_er(100, 300, 5, false);
    VoteRankParams params{.r = 20, .pad = true};
    VoteState state = init_vote_state(g, params);
    std::mt19937_64 rng(7);
    for (int turn = 0; turn < 20; ++turn) {
        NodeId winner;
        do {
            winner = static_cast<NodeId>(rng() % g.node_count());
        } while (state.elected[static_cast<std::size_t>(winner)]);
        update_after_election(state, winner, g);
        for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u) {
            double expect = 0.0;
            if (!state.elected[static_cast<std::size_t>(u)])
                for (NodeId v : g.neighbors(u))
                    expect += state.ability[static_cast<std::size_t>(v)];
            CHECK(state.score[static_cast<std::size_t>(u)] == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("matches the naive oracle across graph families") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 20 + rng() % 120;
        const bool directed = rep % 3 == 0;
        const bool ba = rep % 2 == 0 && !directed;
        Graph g = ba ? generate_ba(n, 1 + rng() % 4, rng())
                     : generate_er(n, n + rng() % (2 * n), rng(), directed);
        VoteRankParams params{.r = g.node_count(), .pad = rep % 4 == 0};
        if (rep % 5 == 0) params.alpha = 0.5;
        if (rep % 7 == 0) params.f = 0.25;
        if (rep % 6 == 0) params.non_adjacent = true;
        auto fast = voterank(g, params);
        auto naive = oracle::voterank_naive(g, params);
        CHECK(fast.nodes == naive.nodes);
        CHECK(fast.exhausted == naive.exhausted);
        for (std::size_t i = 0; i < fast.size(); ++i)
            CHECK(fast.scores[i] == naive.scores[i]);
    }
}

TEST_CASE("two disjoint triangles match the oracle") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, false);
    auto fast = voterank(g, {.r = 2});
    auto naive = oracle::voterank_naive(g, {.r = 2});
    CHECK(fast.nodes == naive.nodes);
}

TEST_CASE("abilities never increase over turns") {
    Graph g = generate_ba(80, 2, 3);
    VoteRankParams params{.r = 40, .pad = true};
    VoteState state = init_vote_state(g, params);
    auto previous = state.ability;
    for (NodeId turn = 0; turn < 40; ++turn) {
        // Mirror the real election order.
        NodeId best = -1;
        for (NodeId u = 0; static_cast<std::size_t>(u) < g.node_count(); ++u) {
            if (state.elected[static_cast<std::size_t>(u)]) continue;
            if (best < 0 ||
                state.score[static_cast<std::size_t>(u)] > state.score[static_cast<std::size_t>(best)])
                best = u;
        }
        update_after_election(state, best, g);
        for (std::size_t u = 0; u < g.node_count(); ++u) {
            CHECK(state.ability[u] <= previous[u]);
            CHECK(state.ability[u] >= 0.0);
        }
        previous = state.ability;
    }
}

TEST_CASE("scaling abilities and f together keeps the election order") {
    Graph g = generate_er(60, 150, 8, false);
    auto base = voterank(g, {.r = 15});
    // alpha = 1 multiplies both initial ability and the degree-scaled f
    // by k_i; on a regular graph that is a uniform scale.
    Graph ring = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}},
                            false);
    auto a0 = voterank(ring, {.r = 4, .alpha = 0.0});
    auto a1 = voterank(ring, {.r = 4, .alpha = 1.0});
    CHECK(a0.nodes == a1.nodes);
    CHECK(base.size() == 15);  // uses base to keep the ER case exercised
}

TEST_CASE("directed election follows out-neighbor voters") {
    // 0 -> 1, 2 -> 1: node 1's voters are its out-neighbors (none), so
    // nodes 0 and 2 score va(1)... = their out-neighbors' abilities.
    Graph g = parse_edge_list("0 1\n2 1\n1 3\n3 1\n", true);
    auto fast = voterank(g, {.r = 2});
    auto naive = oracle::voterank_naive(g, {.r = 2});
    CHECK(fast.nodes == naive.nodes);
}

TEST_CASE("non-adjacent variant on the star exhausts after the center") {
    auto s = voterank_non_adjacent(star6(), {.r = 2});
    CHECK(s.size() == 1);
    CHECK(s.nodes[0] == 0);
    CHECK(s.exhausted);
}

TEST_CASE("non-adjacent on two disjoint edges picks one endpoint each") {
    Graph g = make_graph(4, {{0, 1}, {2, 3}}, false);
    auto s = voterank_non_adjacent(g, {.r = 2});
    REQUIRE(s.size() == 2);
    CHECK(!g.has_edge(s.nodes[0], s.nodes[1]));
}

TEST_CASE("non-adjacent with r = 1 equals plain voterank") {
    Graph g = generate_ba(50, 2, 17);
    CHECK(voterank_non_adjacent(g, {.r = 1}).nodes == voterank(g, {.r = 1}).nodes);
}

TEST_CASE("non-adjacent output is an independent set") {
    for (std::uint64_t seed : {1u, 5u, 9u}) {
        Graph g = generate_er(80, 160, seed, false);
        auto s = voterank_non_adjacent(g, {.r = 20});
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK(!g.has_edge(s.nodes[i], s.nodes[j]));
    }
}

TEST_CASE("custom tie-break is honored") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, false);
    auto biggest = voterank(g, {.r = 1}, [](NodeId a, NodeId b) { return a > b; });
    CHECK(biggest.nodes[0] == 5);
    auto smallest = voterank(g, {.r = 1});
    CHECK(smallest.nodes[0] == 0);
}
