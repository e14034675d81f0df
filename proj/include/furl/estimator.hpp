#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "furl/adjacency.hpp"
#include "furl/edge.hpp"
#include "furl/oracle.hpp"
#include "furl/rng.hpp"
#include "furl/sample_buffer.hpp"

namespace furl {

enum class Variant {
    furl_s,    // simple stream, uniform reservoir
    furl_sx,   // furl_s + smoothed estimate
    furl_mb,   // multigraph, binary counting, min-hash reservoir
    furl_mxb,  // furl_mb + smoothed estimate
    furl_mw,   // multigraph, weighted counting, min-hash reservoir
    furl_mxw,  // furl_mw + smoothed estimate
    mascot,    // edge-sampling baseline, unbounded storage
};

constexpr bool is_minhash_variant(Variant v) {
    return v == Variant::furl_mb || v == Variant::furl_mxb || v == Variant::furl_mw ||
           v == Variant::furl_mxw;
}

constexpr bool is_smoothed_variant(Variant v) {
    return v == Variant::furl_sx || v == Variant::furl_mxb || v == Variant::furl_mxw;
}

constexpr bool is_simple_stream_variant(Variant v) {
    return v == Variant::furl_s || v == Variant::furl_sx || v == Variant::mascot;
}

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

struct EstimatorConfig {
    Variant variant = Variant::furl_s;
    std::size_t memory = 0;       // buffer capacity M (unused by mascot)
    std::size_t bucket = 0;       // smoothing interval J; 0 means "use memory"
    double delta = 0.0;           // decaying factor for past estimates
    double p = 1.0;               // mascot edge-sampling probability
    std::uint64_t seed = 0;       // reservoir RNG seed
    std::uint64_t hash_seed = 1;  // edge-hash seed (min-hash variants)
    bool strict = false;          // reject duplicate arrivals on simple variants

    std::size_t bucket_or_default() const { return bucket == 0 ? memory : bucket; }

    // Throws std::invalid_argument on out-of-range parameters. Minimum buffer
    // sizes keep the estimation weights positive: the binary multigraph weight
    // carries an (M-3)/M factor, the weighted one (M-2)/M, and the simple one
    // divides by M(M-1).
    void validate() const;
};

// Adds theta per common neighbor of the arriving edge's endpoints, and
// theta * |common| to each endpoint.
void increase_estimation(const AdjacencyIndex& adjacency, LocalCounts& counts, Edge e,
                         double theta);

// Weighted form: each common neighbor w contributes
// theta * occurrence(u,w) * occurrence(v,w) to all three nodes.
void increase_estimation_weighted(const SampleBuffer& buffer, LocalCounts& counts,
                                  Edge e, double theta);

// One streaming estimator instance: consumes one edge per call and maintains
// per-node triangle estimates in a fixed-size buffer (except mascot, which
// intentionally has no memory bound). Single-writer; instances are independent.
class Estimator {
public:
    explicit Estimator(const EstimatorConfig& config);

    // Processes the next stream event. Self-loops are rejected.
    void process(Edge e);

    // Current estimate per node; nodes never seen count zero. Smoothed
    // variants blend the decayed past estimate with the raw counts.
    LocalCounts query() const;
    double query(NodeId u) const;

    const LocalCounts& raw_counts() const { return counts_; }
    std::uint64_t time() const { return time_; }
    bool exact_counts() const { return exact_; }
    std::optional<std::uint64_t> overflow_time() const { return overflow_time_; }
    std::size_t buffered_edges() const;
    const SampleBuffer& buffer() const { return *buffer_; }
    const EstimatorConfig& config() const { return config_; }

private:
    void process_furl_s(Edge e);
    void process_furl_mb(Edge e);
    void process_furl_mw(Edge e);
    void process_mascot(Edge e);

    void update_simple(Edge e);
    void update_binary(Edge e, bool sampled);
    void update_weighted(Edge e);

    // Returns true when the edge ends up buffered. `overflow_lag` is the
    // distance from the current time to the recorded overflow time (0 when the
    // raw counts are still exact after this event, 1 when they already include
    // a reweighted contribution from it).
    bool sample_uniform(Edge e);
    bool sample_minhash_new(Edge e, std::uint64_t overflow_lag);

    void mark_overflow(std::uint64_t overflow_lag);
    void weighted_average();
    void discover(NodeId u);
    double simple_weight() const;

    EstimatorConfig config_;
    std::optional<SampleBuffer> buffer_;
    AdjacencyIndex baseline_graph_;  // mascot only
    std::size_t baseline_edges_ = 0;
    LocalCounts counts_;    // raw estimate
    LocalCounts smoothed_;  // decayed bucket-boundary estimate
    std::uint64_t time_ = 0;
    bool exact_ = true;
    std::optional<std::uint64_t> overflow_time_;
    Rng rng_;
};

}  // namespace furl
