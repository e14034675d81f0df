#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "furl/estimator.hpp"

namespace furl {

struct ProbeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a prediction formula is undefined for the given buffer size;
// the estimator itself still runs, only the prediction is unavailable.
struct ProbeUnsupported : ProbeError {
    using ProbeError::ProbeError;
};

// A purpose-built stream containing exactly one triangle among triangle-free
// filler edges, so the triangle's estimated count is readable directly off
// any of its three nodes.
struct ProbeStream {
    std::vector<Edge> edges;
    std::array<NodeId, 3> triangle{};
    std::uint64_t t_lambda = 0;     // closing-edge arrival time
    std::uint64_t t_query = 0;      // stream length; queries happen here
    std::uint64_t overflow_time = 0;
    int bucket_lambda = 0;          // 0 = closes during exact counting
    int bucket_query = 0;
};

// Builds a probe stream for a smoothed variant: wedge edges arrive first,
// distinct path-filler edges pad the stream, and the closing edge lands
// mid-bucket `bucket_lambda`. The stream ends on the boundary of
// `bucket_query`. bucket_lambda == 0 closes the triangle during the exact
// phase.
ProbeStream make_probe_stream(Variant variant, std::size_t memory, std::size_t bucket,
                              int bucket_lambda, int bucket_query);

// Checks that the probed triangle is the only one touching its nodes.
void validate_probe_stream(const ProbeStream& probe);

struct ProbeOutcome {
    double empirical = 0.0;
    double predicted = 0.0;
    double stderr_value = 0.0;
    bool pass = false;
};

// Expected estimated count of the probed triangle: 1 - delta^(B - b + 1) once
// the triangle closes after overflow, exactly 1 before.
double predicted_expectation(double delta, int bucket_lambda, int bucket_query);

// Predicted variance of the estimated count, per variant:
//   simple:            (1-phi)^2 ((t-1)(t-2)/(M(M-1)) - 1)
//   multigraph binary: (1-phi)^2 ((M-3)(u-3)(u-4)(u-5)/(M(M-4)(M-5)(M-6)) - 1)
//   multigraph weighted:(1-phi)^2 ((M-2)(u'-2)(u'-3)/(M(M-3)(M-4)) - 1)
// where u counts distinct edges at the closing time (u' one step earlier).
double predicted_variance(const ProbeStream& probe, std::size_t memory, double delta,
                          Variant variant);

// Runs n_trials independent estimations over the probe stream and compares
// the sample mean of the queried triangle count against the prediction
// (pass within 3 standard errors).
ProbeOutcome probe_expectation(const ProbeStream& probe, const EstimatorConfig& base,
                               int n_trials, int threads = 0);

// As above for the sample variance (pass within 5 standard errors of the
// variance estimate, via the empirical fourth moment).
ProbeOutcome probe_variance(const ProbeStream& probe, const EstimatorConfig& base,
                            int n_trials, int threads = 0);

// Smallest time from which estimates concentrate: first integer T with
// (T-1)(T-2)/(M(M-1)) > (2-delta)/(1-delta).
std::uint64_t concentration_threshold(std::size_t memory, double delta);

// Estimation-weight second moments used by the variance formulas.
double weight_second_moment_simple(std::size_t memory, std::uint64_t t_lambda);
double weight_second_moment_binary(std::size_t memory, std::uint64_t unique_edges);
double weight_second_moment_weighted(std::size_t memory, std::uint64_t unique_edges_prev);

// True when [mean_in - var_in, mean_in + var_in] lies strictly inside
// [mean_out - var_out, mean_out + var_out].
bool interval_strictly_included(double mean_in, double var_in, double mean_out,
                                double var_out);

struct IntervalGridResult {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};

// Sweeps every bucket gap in [1, max_bucket_gap] and every integer time (or
// distinct-edge) parameter from the variant's concentration threshold up to
// `parameter_limit`, checking that the smoothed estimator's mean +- variance
// interval nests strictly inside the raw estimator's.
IntervalGridResult check_interval_inclusion(Variant variant, std::size_t memory,
                                            double delta, int max_bucket_gap,
                                            std::uint64_t parameter_limit);

}  // namespace furl
