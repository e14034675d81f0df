#pragma once

#include <unordered_map>
#include <vector>

#include "furl/edge.hpp"

namespace furl {

// Sparse node -> triangle-count map; nodes absent from the map count zero.
using LocalCounts = std::unordered_map<NodeId, double>;

inline double count_of(const LocalCounts& counts, NodeId u) {
    auto it = counts.find(u);
    return it == counts.end() ? 0.0 : it->second;
}

// Exact per-node triangle counts of a simple graph (deduplicated, loop-free).
// Wedge enumeration over sorted adjacency, intersecting the smaller list.
LocalCounts exact_local_simple(const std::vector<Edge>& edges);

// Multigraph truth ignoring multiplicities: deduplicate then count.
LocalCounts exact_local_binary(const std::vector<Edge>& stream);

// Multigraph truth weighting each triangle by the product of its three edge
// multiplicities over the whole stream.
LocalCounts exact_local_weighted(const std::vector<Edge>& stream);

// Every triangle touches exactly three nodes.
double global_from_local(const LocalCounts& counts);

}  // namespace furl
