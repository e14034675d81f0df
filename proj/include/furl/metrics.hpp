#pragma once

#include <vector>

#include "furl/estimator.hpp"
#include "furl/oracle.hpp"
#include "furl/stream.hpp"

namespace furl {

// Mean relative error with +1 smoothing in the denominator, over the node set
// `nodes` (all nodes appearing in the stream, including zero-triangle ones).
// Nodes absent from either map contribute zero for that side.
double mre(const LocalCounts& estimate, const LocalCounts& truth,
           const std::vector<NodeId>& nodes);

// Memory proportion: buffered capacity over total edges for simple-stream
// variants, over distinct edges for multigraph variants, and the sampling
// probability itself for mascot.
double memory_proportion(Variant variant, std::size_t memory, double p,
                         const StreamStats& stats);

// Inverse of memory_proportion: resolves a proportion to a buffer capacity
// (ceil), using the stream statistics of the target stream.
std::size_t resolve_memory(Variant variant, double xi, const StreamStats& stats);

std::vector<NodeId> all_nodes(std::size_t n_nodes);

}  // namespace furl
