#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "furl/edge.hpp"

namespace furl {

// Neighbor-set index over a mutable edge set. Backs the sample buffer's
// common-neighbor queries and the unbounded baseline graph.
class AdjacencyIndex {
public:
    void add(Edge e) {
        adj_[e.a].insert(e.b);
        adj_[e.b].insert(e.a);
    }

    void remove(Edge e) {
        erase_directed(e.a, e.b);
        erase_directed(e.b, e.a);
    }

    bool contains(NodeId u, NodeId v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) > 0;
    }

    std::size_t degree(NodeId u) const {
        auto it = adj_.find(u);
        return it == adj_.end() ? 0 : it->second.size();
    }

    // Iterates the smaller neighbor set and probes the larger.
    std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const {
        std::vector<NodeId> out;
        auto iu = adj_.find(u);
        auto iv = adj_.find(v);
        if (iu == adj_.end() || iv == adj_.end()) return out;
        const auto* small = &iu->second;
        const auto* large = &iv->second;
        if (small->size() > large->size()) std::swap(small, large);
        for (NodeId w : *small) {
            if (large->count(w)) out.push_back(w);
        }
        return out;
    }

    bool operator==(const AdjacencyIndex& other) const { return adj_ == other.adj_; }

private:
    void erase_directed(NodeId u, NodeId v) {
        auto it = adj_.find(u);
        if (it == adj_.end()) return;
        it->second.erase(v);
        if (it->second.empty()) adj_.erase(it);
    }

    std::unordered_map<NodeId, std::unordered_set<NodeId>> adj_;
};

}  // namespace furl
