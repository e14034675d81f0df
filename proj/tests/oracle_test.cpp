#include <doctest.h>

#include <cmath>
#include <vector>

#include "furl/oracle.hpp"
#include "furl/stream.hpp"
#include "furl/synthetic.hpp"

using namespace furl;

namespace {

// Independent reference: O(n^3) triple loop over an adjacency matrix.
LocalCounts brute_force_local(const std::vector<Edge>& edges) {
    NodeId n = 0;
    for (Edge e : edges) n = std::max({n, static_cast<NodeId>(e.a + 1),
                                       static_cast<NodeId>(e.b + 1)});
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (Edge e : edges) adj[e.a][e.b] = adj[e.b][e.a] = true;
    LocalCounts counts;
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (NodeId c = b + 1; c < n; ++c) {
                if (adj[a][c] && adj[b][c]) {
                    counts[a] += 1.0;
                    counts[b] += 1.0;
                    counts[c] += 1.0;
                }
            }
        }
    }
    return counts;
}

std::vector<Edge> complete_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return edges;
}

bool counts_equal(const LocalCounts& a, const LocalCounts& b) {
    for (const auto& [node, value] : a) {
        if (count_of(b, node) != value) return false;
    }
    for (const auto& [node, value] : b) {
        if (count_of(a, node) != value) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("triangle counts on small fixed graphs") {
    auto k3 = exact_local_simple(complete_graph(3));
    CHECK(count_of(k3, 0) == 1.0);
    CHECK(count_of(k3, 1) == 1.0);
    CHECK(count_of(k3, 2) == 1.0);

    auto k4 = exact_local_simple(complete_graph(4));
    for (NodeId u = 0; u < 4; ++u) CHECK(count_of(k4, u) == 3.0);

    auto path = exact_local_simple({{1, 2}, {2, 3}});
    CHECK(count_of(path, 1) == 0.0);
    CHECK(count_of(path, 2) == 0.0);
    CHECK(count_of(path, 3) == 0.0);
}

TEST_CASE("global count is a third of the local sum") {
    CHECK(global_from_local(exact_local_simple(complete_graph(3))) == 1.0);
    CHECK(global_from_local(exact_local_simple(complete_graph(4))) == 4.0);
    CHECK(global_from_local({}) == 0.0);
}

TEST_CASE("binary counting ignores multiplicities") {
    // Triangle whose edges arrive 3, 2, and 1 times.
    std::vector<Edge> stream = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}};
    auto counts = exact_local_binary(stream);
    CHECK(count_of(counts, 0) == 1.0);
    CHECK(count_of(counts, 1) == 1.0);
    CHECK(count_of(counts, 2) == 1.0);

    CHECK(exact_local_binary({}).empty());

    std::vector<Edge> k4_dup;
    for (Edge e : complete_graph(4)) {
        for (int i = 0; i < 5; ++i) k4_dup.push_back(e);
    }
    CHECK(counts_equal(exact_local_binary(k4_dup),
                       exact_local_simple(complete_graph(4))));
}

TEST_CASE("weighted counting multiplies edge multiplicities") {
    std::vector<Edge> stream = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}};
    auto counts = exact_local_weighted(stream);
    CHECK(count_of(counts, 0) == 6.0);
    CHECK(count_of(counts, 1) == 6.0);
    CHECK(count_of(counts, 2) == 6.0);

    // Triangle with multiplicities 2, 3, 4.
    std::vector<Edge> k3w;
    for (int i = 0; i < 2; ++i) k3w.push_back({0, 1});
    for (int i = 0; i < 3; ++i) k3w.push_back({1, 2});
    for (int i = 0; i < 4; ++i) k3w.push_back({0, 2});
    auto w = exact_local_weighted(k3w);
    for (NodeId u = 0; u < 3; ++u) CHECK(count_of(w, u) == 24.0);
}

TEST_CASE("weighted counting with unit multiplicities reduces to binary") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto edges = erdos_renyi(25, 0.3, seed);
        CHECK(counts_equal(exact_local_weighted(edges), exact_local_binary(edges)));
    }
}

TEST_CASE("wedge enumeration matches the triple-loop reference") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto edges = erdos_renyi(60, 0.15, seed);
        auto fast = exact_local_simple(edges);
        auto slow = brute_force_local(edges);
        CHECK(counts_equal(fast, slow));
        double tripled = 3.0 * global_from_local(fast);
        CHECK(tripled == std::round(tripled));
    }
    auto dense = erdos_renyi(40, 0.5, 99);
    CHECK(counts_equal(exact_local_simple(dense), brute_force_local(dense)));
}

TEST_CASE("simple counts never exceed the wedge bound") {
    auto edges = erdos_renyi(50, 0.25, 7);
    auto counts = exact_local_simple(edges);
    auto degrees = stream_degrees(edges, node_count(edges));
    for (const auto& [node, value] : counts) {
        double wedges = static_cast<double>(degrees[node]) *
                        (static_cast<double>(degrees[node]) - 1.0) / 2.0;
        CHECK(value >= 0.0);
        CHECK(value <= wedges);
    }
}
