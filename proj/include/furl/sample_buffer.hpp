#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "furl/adjacency.hpp"
#include "furl/edge.hpp"
#include "furl/hash.hpp"

namespace furl {

enum class BufferMode {
    uniform,   // positional slots, reservoir replacement
    min_hash,  // hash-ordered distinct-edge reservoir with occurrence counts
};

// Fixed-capacity edge store with a neighbor index. Holds at most `capacity`
// edges at all times; eviction and insertion happen atomically inside one
// replace call.
class SampleBuffer {
public:
    SampleBuffer(std::size_t capacity, BufferMode mode, std::uint64_t hash_seed = 0)
        : capacity_(capacity), mode_(mode), hash_seed_(hash_seed) {
        if (capacity_ == 0) throw std::invalid_argument("buffer capacity must be positive");
        if (mode_ == BufferMode::uniform) slots_.reserve(capacity_);
    }

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const {
        return mode_ == BufferMode::uniform ? slots_.size() : entries_.size();
    }
    bool full() const { return size() == capacity_; }
    BufferMode mode() const { return mode_; }

    // Unconditional store while the buffer has room. The edge must not already
    // be present.
    void append(Edge e) {
        if (full()) throw std::logic_error("append on full buffer");
        if (mode_ == BufferMode::uniform) {
            slots_.push_back(e);
        } else {
            double h = hash01(e, hash_seed_);
            auto [it, inserted] = entries_.emplace(e, Entry{h, 1});
            if (!inserted) throw std::logic_error("append of buffered edge");
            by_hash_.emplace(h, e);
        }
        adjacency_.add(e);
    }

    // Reservoir replacement: draw i uniformly from [1, t]; if i <= capacity,
    // the edge at slot i is evicted and e stored there. `draw(lo, hi)` supplies
    // the integer so tests can force outcomes.
    template <class Draw>
    bool replace_uniform(Edge e, std::uint64_t t, Draw&& draw) {
        if (!full()) throw std::logic_error("replace_uniform before buffer is full");
        std::uint64_t i = draw(std::uint64_t{1}, t);
        if (i > capacity_) return false;
        Edge& slot = slots_[i - 1];
        adjacency_.remove(slot);
        slot = e;
        adjacency_.add(e);
        return true;
    }

    // Min-hash replacement: e enters iff its hash beats the current maximum;
    // the maximum-hash edge is evicted. Pure function of (stream, hash seed).
    bool replace_minhash(Edge e) {
        if (!full()) throw std::logic_error("replace_minhash before buffer is full");
        double h = hash01(e, hash_seed_);
        auto worst = std::prev(by_hash_.end());
        if (!(h < worst->first)) return false;
        Edge evicted = worst->second;
        by_hash_.erase(worst);
        entries_.erase(evicted);
        adjacency_.remove(evicted);
        entries_.emplace(e, Entry{h, 1});
        by_hash_.emplace(h, e);
        adjacency_.add(e);
        return true;
    }

    bool contains(Edge e) const {
        if (mode_ == BufferMode::uniform) return adjacency_.contains(e.a, e.b);
        return entries_.count(e) > 0;
    }

    std::uint64_t occurrence(Edge e) const {
        auto it = entries_.find(e);
        return it == entries_.end() ? 0 : it->second.occurrence;
    }

    void increment_occurrence(Edge e) {
        auto it = entries_.find(e);
        if (it == entries_.end()) throw std::logic_error("increment_occurrence on absent edge");
        ++it->second.occurrence;
    }

    // Maximum hash among buffered edges; consulted only once the buffer is full.
    double max_hash() const {
        if (mode_ != BufferMode::min_hash) throw std::logic_error("max_hash in uniform mode");
        if (!full()) throw std::logic_error("max_hash before buffer is full");
        return std::prev(by_hash_.end())->first;
    }

    std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const {
        return adjacency_.common_neighbors(u, v);
    }

    const AdjacencyIndex& adjacency() const { return adjacency_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(size());
        if (mode_ == BufferMode::uniform) {
            out = slots_;
        } else {
            for (const auto& [hash, edge] : by_hash_) out.push_back(edge);
        }
        return out;
    }

    // Debug dump, one `a b h(e) O_e` line per edge.
    void dump(std::ostream& os) const {
        if (mode_ == BufferMode::uniform) {
            for (const Edge& e : slots_) os << e.a << ' ' << e.b << " 0 1\n";
        } else {
            for (const auto& [hash, edge] : by_hash_) {
                os << edge.a << ' ' << edge.b << ' ' << hash << ' '
                   << entries_.at(edge).occurrence << '\n';
            }
        }
    }

private:
    struct Entry {
        double hash;
        std::uint64_t occurrence;
    };

    std::size_t capacity_;
    BufferMode mode_;
    std::uint64_t hash_seed_;
    AdjacencyIndex adjacency_;
    std::vector<Edge> slots_;                      // uniform mode
    std::unordered_map<Edge, Entry> entries_;      // min-hash mode
    std::set<std::pair<double, Edge>> by_hash_;    // min-hash mode, ascending
};

}  // namespace furl
