#include "furl/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "furl/stream.hpp"

namespace furl {

namespace {

using AdjacencyLists = std::unordered_map<NodeId, std::vector<NodeId>>;

AdjacencyLists sorted_adjacency(const std::vector<Edge>& edges) {
    AdjacencyLists adj;
    for (Edge e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& [node, neighbors] : adj) std::sort(neighbors.begin(), neighbors.end());
    return adj;
}

// Calls visit(a, b, w) once per triangle, with a < b < w.
template <class Visit>
void for_each_triangle(const std::vector<Edge>& edges, const AdjacencyLists& adj,
                       Visit&& visit) {
    for (Edge e : edges) {
        const auto& na = adj.at(e.a);
        const auto& nb = adj.at(e.b);
        auto ia = std::lower_bound(na.begin(), na.end(), e.b + 1);
        auto ib = std::lower_bound(nb.begin(), nb.end(), e.b + 1);
        while (ia != na.end() && ib != nb.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                visit(e.a, e.b, *ia);
                ++ia;
                ++ib;
            }
        }
    }
}

}  // namespace

LocalCounts exact_local_simple(const std::vector<Edge>& edges) {
    LocalCounts counts;
    auto adj = sorted_adjacency(edges);
    for_each_triangle(edges, adj, [&](NodeId a, NodeId b, NodeId w) {
        counts[a] += 1.0;
        counts[b] += 1.0;
        counts[w] += 1.0;
    });
    return counts;
}

LocalCounts exact_local_binary(const std::vector<Edge>& stream) {
    return exact_local_simple(preprocess_simple(stream));
}

LocalCounts exact_local_weighted(const std::vector<Edge>& stream) {
    std::unordered_map<Edge, std::uint64_t> multiplicity;
    for (Edge e : stream) {
        if (!is_self_loop(e)) ++multiplicity[e];
    }
    std::vector<Edge> simple = preprocess_simple(stream);
    LocalCounts counts;
    auto adj = sorted_adjacency(simple);
    for_each_triangle(simple, adj, [&](NodeId a, NodeId b, NodeId w) {
        double weight = static_cast<double>(multiplicity.at(make_edge(a, b))) *
                        static_cast<double>(multiplicity.at(make_edge(b, w))) *
                        static_cast<double>(multiplicity.at(make_edge(a, w)));
        counts[a] += weight;
        counts[b] += weight;
        counts[w] += weight;
    });
    return counts;
}

double global_from_local(const LocalCounts& counts) {
    double total = 0.0;
    for (const auto& [node, c] : counts) total += c;
    return total / 3.0;
}

}  // namespace furl
