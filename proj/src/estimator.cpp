#include "furl/estimator.hpp"

#include <stdexcept>

namespace furl {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::furl_s: return "furl-s";
        case Variant::furl_sx: return "furl-sx";
        case Variant::furl_mb: return "furl-mb";
        case Variant::furl_mxb: return "furl-mxb";
        case Variant::furl_mw: return "furl-mw";
        case Variant::furl_mxw: return "furl-mxw";
        case Variant::mascot: return "mascot";
    }
    return "unknown";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    for (Variant v : {Variant::furl_s, Variant::furl_sx, Variant::furl_mb,
                      Variant::furl_mxb, Variant::furl_mw, Variant::furl_mxw,
                      Variant::mascot}) {
        if (variant_name(v) == name) return v;
    }
    return std::nullopt;
}

void EstimatorConfig::validate() const {
    if (variant == Variant::mascot) {
        if (!(p > 0.0 && p <= 1.0)) {
            throw std::invalid_argument("mascot requires 0 < p <= 1");
        }
        return;
    }
    std::size_t min_memory =
        (variant == Variant::furl_mb || variant == Variant::furl_mxb) ? 4 : 3;
    if (memory < min_memory) {
        throw std::invalid_argument(std::string(variant_name(variant)) +
                                    " requires memory >= " + std::to_string(min_memory));
    }
    if (is_smoothed_variant(variant)) {
        if (!(delta >= 0.0 && delta < 1.0)) {
            throw std::invalid_argument("delta must satisfy 0 <= delta < 1");
        }
        if (bucket_or_default() == 0) {
            throw std::invalid_argument("bucket size must be positive");
        }
    }
}

void increase_estimation(const AdjacencyIndex& adjacency, LocalCounts& counts, Edge e,
                         double theta) {
    auto common = adjacency.common_neighbors(e.a, e.b);
    if (common.empty()) return;
    for (NodeId w : common) counts[w] += theta;
    double endpoint_gain = theta * static_cast<double>(common.size());
    counts[e.a] += endpoint_gain;
    counts[e.b] += endpoint_gain;
}

void increase_estimation_weighted(const SampleBuffer& buffer, LocalCounts& counts,
                                  Edge e, double theta) {
    auto common = buffer.common_neighbors(e.a, e.b);
    for (NodeId w : common) {
        double gain = theta *
                      static_cast<double>(buffer.occurrence(make_edge(e.a, w))) *
                      static_cast<double>(buffer.occurrence(make_edge(e.b, w)));
        counts[w] += gain;
        counts[e.a] += gain;
        counts[e.b] += gain;
    }
}

Estimator::Estimator(const EstimatorConfig& config) : config_(config), rng_(config.seed) {
    config_.validate();
    if (config_.variant != Variant::mascot) {
        buffer_.emplace(config_.memory,
                        is_minhash_variant(config_.variant) ? BufferMode::min_hash
                                                            : BufferMode::uniform,
                        config_.hash_seed);
    }
}

void Estimator::process(Edge e) {
    if (is_self_loop(e)) throw std::invalid_argument("self-loop in estimator stream");
    ++time_;
    discover(e.a);
    discover(e.b);
    switch (config_.variant) {
        case Variant::furl_s:
        case Variant::furl_sx:
            process_furl_s(e);
            break;
        case Variant::furl_mb:
        case Variant::furl_mxb:
            process_furl_mb(e);
            break;
        case Variant::furl_mw:
        case Variant::furl_mxw:
            process_furl_mw(e);
            break;
        case Variant::mascot:
            process_mascot(e);
            return;
    }
    if (is_smoothed_variant(config_.variant)) weighted_average();
}

// Simple stream: count against the pre-insertion buffer, then reservoir-sample.
void Estimator::process_furl_s(Edge e) {
    if (config_.strict && buffer_->contains(e)) {
        throw std::invalid_argument("duplicate edge in simple stream at time " +
                                    std::to_string(time_));
    }
    update_simple(e);
    sample_uniform(e);
}

// Multigraph, binary: duplicates of buffered edges are discarded outright;
// otherwise sample first, then count only if the edge entered the buffer.
void Estimator::process_furl_mb(Edge e) {
    if (buffer_->contains(e)) return;
    bool sampled = sample_minhash_new(e, 1);
    update_binary(e, sampled);
}

// Multigraph, weighted: count on every arrival against the previous buffer
// state, then sample (a duplicate arrival bumps the occurrence count).
void Estimator::process_furl_mw(Edge e) {
    update_weighted(e);
    if (buffer_->contains(e)) {
        buffer_->increment_occurrence(e);
    } else {
        sample_minhash_new(e, 0);
    }
}

// Decoupled counting at weight p^-2 against the sampled graph, then keep the
// edge with probability p. No memory bound: the kept-edge set only grows.
void Estimator::process_mascot(Edge e) {
    double theta = 1.0 / (config_.p * config_.p);
    increase_estimation(baseline_graph_, counts_, e, theta);
    if (rng_.bernoulli(config_.p)) {
        baseline_graph_.add(e);
        ++baseline_edges_;
    }
}

void Estimator::update_simple(Edge e) {
    double theta = exact_ ? 1.0 : simple_weight();
    increase_estimation(buffer_->adjacency(), counts_, e, theta);
}

void Estimator::update_binary(Edge e, bool sampled) {
    if (exact_) {
        increase_estimation(buffer_->adjacency(), counts_, e, 1.0);
    } else if (sampled) {
        double h = buffer_->max_hash();
        double theta = (static_cast<double>(config_.memory) - 3.0) /
                       static_cast<double>(config_.memory) / (h * h * h);
        increase_estimation(buffer_->adjacency(), counts_, e, theta);
    }
}

void Estimator::update_weighted(Edge e) {
    double theta = 1.0;
    if (!exact_) {
        double h = buffer_->max_hash();
        theta = (static_cast<double>(config_.memory) - 2.0) /
                static_cast<double>(config_.memory) / (h * h);
    }
    increase_estimation_weighted(*buffer_, counts_, e, theta);
}

bool Estimator::sample_uniform(Edge e) {
    if (!buffer_->full()) {
        buffer_->append(e);
        return true;
    }
    if (exact_) mark_overflow(0);
    return buffer_->replace_uniform(
        e, time_, [this](std::uint64_t lo, std::uint64_t hi) {
            return rng_.uniform_int(lo, hi);
        });
}

bool Estimator::sample_minhash_new(Edge e, std::uint64_t overflow_lag) {
    if (!buffer_->full()) {
        buffer_->append(e);
        return true;
    }
    if (exact_) mark_overflow(overflow_lag);
    return buffer_->replace_minhash(e);
}

// Records the last time the raw counts were exact and snapshots them as the
// initial smoothed estimate. The binary multigraph variant samples before it
// counts, so its counts at the overflow event already carry a reweighted
// contribution and the exact time is one step earlier; its snapshot is taken
// here, before that contribution lands.
void Estimator::mark_overflow(std::uint64_t overflow_lag) {
    exact_ = false;
    overflow_time_ = time_ - overflow_lag;
    if (is_smoothed_variant(config_.variant)) smoothed_ = counts_;
}

void Estimator::weighted_average() {
    if (!overflow_time_) return;
    if (time_ == *overflow_time_) {
        smoothed_ = counts_;
    } else if (time_ > *overflow_time_ &&
               (time_ - *overflow_time_) % config_.bucket_or_default() == 0) {
        for (const auto& [node, raw] : counts_) {
            double& value = smoothed_[node];
            value = config_.delta * value + (1.0 - config_.delta) * raw;
        }
    }
}

LocalCounts Estimator::query() const {
    if (!is_smoothed_variant(config_.variant) || !overflow_time_ ||
        time_ <= *overflow_time_) {
        return counts_;
    }
    if ((time_ - *overflow_time_) % config_.bucket_or_default() == 0) return smoothed_;
    LocalCounts out;
    out.reserve(counts_.size());
    for (const auto& [node, raw] : counts_) {
        out[node] = config_.delta * count_of(smoothed_, node) +
                    (1.0 - config_.delta) * raw;
    }
    return out;
}

double Estimator::query(NodeId u) const {
    if (!is_smoothed_variant(config_.variant) || !overflow_time_ ||
        time_ <= *overflow_time_) {
        return count_of(counts_, u);
    }
    if ((time_ - *overflow_time_) % config_.bucket_or_default() == 0) {
        return count_of(smoothed_, u);
    }
    return config_.delta * count_of(smoothed_, u) +
           (1.0 - config_.delta) * count_of(counts_, u);
}

std::size_t Estimator::buffered_edges() const {
    return buffer_ ? buffer_->size() : baseline_edges_;
}

void Estimator::discover(NodeId u) { counts_.try_emplace(u, 0.0); }

double Estimator::simple_weight() const {
    double m = static_cast<double>(config_.memory);
    double t = static_cast<double>(time_);
    return ((t - 1.0) / m) * ((t - 2.0) / (m - 1.0));
}

}  // namespace furl
