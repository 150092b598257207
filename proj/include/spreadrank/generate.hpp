#ifndef SPREADRANK_GENERATE_HPP
#define SPREADRANK_GENERATE_HPP

#include <cstdint>

#include "spreadrank/graph.hpp"

namespace spreadrank {

/// G(n, m) Erdos-Renyi graph: m distinct edges sampled uniformly.
Graph generate_er(std::size_t n, std::size_t m, std::uint64_t seed, bool directed = false);

/// Barabasi-Albert preferential attachment; each new node attaches
/// `attach` edges. Undirected.
Graph generate_ba(std::size_t n, std::size_t attach, std::uint64_t seed);

}  // namespace spreadrank

#endif
