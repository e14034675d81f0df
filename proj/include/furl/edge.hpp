#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace furl {

// Dense node identifier assigned by first-appearance interning of input tokens.
using NodeId = std::uint32_t;

// Undirected edge stored in canonical order (a < b). Raw parser output may
// temporarily hold a self-loop (a == b) until preprocessing strips it.
struct Edge {
    NodeId a = 0;
    NodeId b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline bool is_self_loop(Edge e) { return e.a == e.b; }

// Orders the endpoints; self-loops are representable so raw streams can carry
// them through to preprocessing.
inline Edge make_edge(NodeId u, NodeId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Rejects self-loops: estimators and buffers only accept proper edges.
inline Edge canonicalize_edge(NodeId u, NodeId v) {
    if (u == v) {
        throw std::invalid_argument("self-loop edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }
    return make_edge(u, v);
}

}  // namespace furl

template <>
struct std::hash<furl::Edge> {
    std::size_t operator()(const furl::Edge& e) const noexcept {
        std::uint64_t x = (static_cast<std::uint64_t>(e.a) << 32) | e.b;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};
