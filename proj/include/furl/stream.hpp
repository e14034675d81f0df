#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "furl/edge.hpp"
#include "furl/interner.hpp"

namespace furl {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One edge per line, whitespace-separated "u v [t]"; the trailing timestamp
// token is parsed and ignored (file order defines stream order). '#' comments
// and blank lines are skipped. Self-loops pass through for preprocessing to
// strip. Returns nullopt for skipped lines.
std::optional<Edge> parse_edge_line(std::string_view line, NodeInterner& interner,
                                    std::size_t line_number);

struct EdgeList {
    std::vector<Edge> edges;  // raw stream: may contain self-loops and duplicates
    NodeInterner interner;
};

EdgeList read_edge_file(const std::string& path);

// Keeps the first occurrence of each distinct canonical edge, drops self-loops.
std::vector<Edge> preprocess_simple(const std::vector<Edge>& events);

// Drops self-loops only; duplicates stay in order.
std::vector<Edge> preprocess_multi(const std::vector<Edge>& events);

// Seeded Fisher-Yates permutation; deterministic per seed.
std::vector<Edge> shuffle_stream(std::vector<Edge> events, std::uint64_t seed);

// Exact distinct-edge count (evaluation-side utility, not a sketch).
std::size_t distinct_edge_count(const std::vector<Edge>& events);

struct StreamStats {
    std::size_t nodes = 0;     // distinct endpoints
    std::size_t events = 0;    // stream length
    std::size_t distinct = 0;  // distinct canonical edges
};

StreamStats stream_stats(const std::vector<Edge>& events);

// Distinct-neighbor count per node over the whole stream, indexed by NodeId.
std::vector<std::size_t> stream_degrees(const std::vector<Edge>& events,
                                        std::size_t n_nodes);

// Largest NodeId + 1 over the stream (0 for an empty stream).
std::size_t node_count(const std::vector<Edge>& events);

}  // namespace furl
