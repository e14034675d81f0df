#pragma once

#include <cstdint>
#include <vector>

#include "furl/estimator.hpp"
#include "furl/oracle.hpp"
#include "furl/stream.hpp"

namespace furl {

struct TrialReport {
    Variant variant;
    double xi = 0.0;
    double delta = 0.0;
    std::size_t bucket = 0;
    std::uint64_t seed = 0;
    double mre = 0.0;
    double wall_ms = 0.0;
    std::size_t n_nodes = 0;
    std::size_t n_edges = 0;
};

struct TrialSummary {
    std::vector<TrialReport> trials;
    std::vector<double> mean;    // per node, indexed by NodeId
    std::vector<double> stderr_combined;  // standard error of the mean; 0 for one trial
};

// Runs the estimator n_trials times with seeds base.seed + i and hash seeds
// base.hash_seed + i, in parallel across threads (0 = hardware default).
// Each trial owns its estimator; results merge in trial order so the
// aggregation is reproducible.
TrialSummary run_trials(const std::vector<Edge>& stream, std::size_t n_nodes,
                        const EstimatorConfig& base, int n_trials,
                        const LocalCounts& truth, const StreamStats& stats,
                        int threads = 0);

}  // namespace furl
