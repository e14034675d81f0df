#pragma once

#include <cstdint>
#include <vector>

#include "furl/edge.hpp"

namespace furl {

// Every unordered pair kept independently with probability p; edges emitted in
// lexicographic order. Deterministic per seed.
std::vector<Edge> erdos_renyi(NodeId n, double p, std::uint64_t seed);

// Preferential attachment: seed clique on (attach + 1) nodes, then each new
// node links to `attach` distinct existing nodes chosen proportionally to
// degree. Emitted in generation order.
std::vector<Edge> barabasi_albert(NodeId n, NodeId attach, std::uint64_t seed);

// Multigraph variant of a simple stream: each edge is repeated a uniform
// 1..max_copies times, and the result is shuffled.
std::vector<Edge> duplicate_edges(const std::vector<Edge>& edges, int max_copies,
                                  std::uint64_t seed);

// Uniformly random (with repetition) proper edges over n nodes.
std::vector<Edge> random_multigraph(NodeId n, std::size_t events, std::uint64_t seed);

// Sparse background graph with a clique planted on the first clique_size nodes.
std::vector<Edge> planted_clique(NodeId n, double background_p, NodeId clique_size,
                                 std::uint64_t seed);

}  // namespace furl
