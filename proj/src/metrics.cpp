#include "furl/metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace furl {

double mre(const LocalCounts& estimate, const LocalCounts& truth,
           const std::vector<NodeId>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("mre over empty node set");
    double total = 0.0;
    for (NodeId u : nodes) {
        double est = count_of(estimate, u);
        double tru = count_of(truth, u);
        total += std::abs(est - tru) / (tru + 1.0);
    }
    return total / static_cast<double>(nodes.size());
}

double memory_proportion(Variant variant, std::size_t memory, double p,
                         const StreamStats& stats) {
    if (variant == Variant::mascot) return p;
    std::size_t denom = is_simple_stream_variant(variant) ? stats.events : stats.distinct;
    if (denom == 0) throw std::invalid_argument("memory proportion over empty stream");
    return static_cast<double>(memory) / static_cast<double>(denom);
}

std::size_t resolve_memory(Variant variant, double xi, const StreamStats& stats) {
    if (!(xi > 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("memory proportion must be in (0, 1]");
    }
    std::size_t denom = is_simple_stream_variant(variant) ? stats.events : stats.distinct;
    if (denom == 0) throw std::invalid_argument("memory proportion over empty stream");
    return static_cast<std::size_t>(
        std::ceil(xi * static_cast<double>(denom)));
}

std::vector<NodeId> all_nodes(std::size_t n_nodes) {
    std::vector<NodeId> nodes(n_nodes);
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    return nodes;
}

}  // namespace furl
