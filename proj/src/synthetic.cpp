#include "furl/synthetic.hpp"

#include <stdexcept>
#include <unordered_set>

#include "furl/rng.hpp"
#include "furl/stream.hpp"

namespace furl {

std::vector<Edge> erdos_renyi(NodeId n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    return edges;
}

std::vector<Edge> barabasi_albert(NodeId n, NodeId attach, std::uint64_t seed) {
    if (attach < 1 || n < attach + 1) {
        throw std::invalid_argument("preferential attachment needs n > attach >= 1");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<NodeId> endpoints;  // each edge contributes both ends
    for (NodeId u = 0; u <= attach; ++u) {
        for (NodeId v = u + 1; v <= attach; ++v) {
            edges.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::unordered_set<NodeId> chosen;
    for (NodeId u = attach + 1; u < n; ++u) {
        chosen.clear();
        while (chosen.size() < attach) {
            NodeId target =
                endpoints[rng.uniform_int(0, endpoints.size() - 1)];
            chosen.insert(target);
        }
        for (NodeId target : chosen) {
            edges.push_back(make_edge(u, target));
            endpoints.push_back(u);
            endpoints.push_back(target);
        }
    }
    return edges;
}

std::vector<Edge> duplicate_edges(const std::vector<Edge>& edges, int max_copies,
                                  std::uint64_t seed) {
    if (max_copies < 1) throw std::invalid_argument("max_copies must be >= 1");
    Rng rng(seed);
    std::vector<Edge> stream;
    for (Edge e : edges) {
        std::uint64_t copies = rng.uniform_int(1, static_cast<std::uint64_t>(max_copies));
        for (std::uint64_t i = 0; i < copies; ++i) stream.push_back(e);
    }
    return shuffle_stream(std::move(stream), seed + 1);
}

std::vector<Edge> random_multigraph(NodeId n, std::size_t events, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two nodes");
    Rng rng(seed);
    std::vector<Edge> stream;
    stream.reserve(events);
    while (stream.size() < events) {
        NodeId u = static_cast<NodeId>(rng.uniform_int(0, n - 1));
        NodeId v = static_cast<NodeId>(rng.uniform_int(0, n - 1));
        if (u == v) continue;
        stream.push_back(make_edge(u, v));
    }
    return stream;
}

std::vector<Edge> planted_clique(NodeId n, double background_p, NodeId clique_size,
                                 std::uint64_t seed) {
    if (clique_size > n) throw std::invalid_argument("clique larger than graph");
    std::vector<Edge> edges = erdos_renyi(n, background_p, seed);
    for (NodeId u = 0; u < clique_size; ++u) {
        for (NodeId v = u + 1; v < clique_size; ++v) {
            edges.push_back({u, v});
        }
    }
    return preprocess_simple(edges);
}

}  // namespace furl
