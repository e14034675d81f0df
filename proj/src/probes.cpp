#include "furl/probes.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "furl/oracle.hpp"

namespace furl {

namespace {

std::uint64_t expected_overflow_time(Variant variant, std::size_t memory) {
    // With an all-distinct stream the buffer overflows at arrival memory + 1.
    // The binary multigraph variant samples before counting, so its counts
    // stop being exact one step earlier.
    if (variant == Variant::furl_mxb || variant == Variant::furl_mb) {
        return memory;
    }
    return memory + 1;
}

double decay_power(double delta, int bucket_lambda, int bucket_query) {
    return std::pow(delta, static_cast<double>(bucket_query - bucket_lambda + 1));
}

}  // namespace

ProbeStream make_probe_stream(Variant variant, std::size_t memory, std::size_t bucket,
                              int bucket_lambda, int bucket_query) {
    if (!is_smoothed_variant(variant)) {
        throw ProbeError("probe streams target smoothed variants");
    }
    if (bucket_lambda < 0 || bucket_query < bucket_lambda ||
        (bucket_lambda == 0 && bucket_query < 1) || bucket == 0) {
        throw ProbeError("invalid probe bucket layout");
    }

    ProbeStream probe;
    probe.triangle = {0, 1, 2};
    probe.overflow_time = expected_overflow_time(variant, memory);
    probe.bucket_lambda = bucket_lambda;
    probe.bucket_query = bucket_query;
    probe.t_query = probe.overflow_time +
                    static_cast<std::uint64_t>(bucket_query) * bucket;
    if (bucket_lambda == 0) {
        probe.t_lambda = 3;
    } else {
        probe.t_lambda = probe.overflow_time +
                         static_cast<std::uint64_t>(bucket_lambda - 1) * bucket +
                         (bucket + 1) / 2;
    }

    probe.edges.reserve(probe.t_query);
    NodeId next_filler = 3;
    probe.edges.push_back({0, 1});
    probe.edges.push_back({0, 2});
    for (std::uint64_t t = 3; t <= probe.t_query; ++t) {
        if (t == probe.t_lambda) {
            probe.edges.push_back({1, 2});
        } else {
            // Path filler: consecutive nodes, triangle-free, disjoint from the
            // probe triangle, every edge distinct.
            probe.edges.push_back({next_filler, static_cast<NodeId>(next_filler + 1)});
            ++next_filler;
        }
    }
    return probe;
}

void validate_probe_stream(const ProbeStream& probe) {
    LocalCounts truth = exact_local_binary(probe.edges);
    for (NodeId u : probe.triangle) {
        if (count_of(truth, u) != 1.0) {
            throw ProbeError("probe stream has extra triangles on probed nodes");
        }
    }
}

double predicted_expectation(double delta, int bucket_lambda, int bucket_query) {
    if (bucket_lambda == 0) return 1.0;
    return 1.0 - decay_power(delta, bucket_lambda, bucket_query);
}

double weight_second_moment_simple(std::size_t memory, std::uint64_t t_lambda) {
    double m = static_cast<double>(memory);
    double t = static_cast<double>(t_lambda);
    return (t - 1.0) * (t - 2.0) / (m * (m - 1.0));
}

double weight_second_moment_binary(std::size_t memory, std::uint64_t unique_edges) {
    if (memory < 7) {
        throw ProbeUnsupported("binary variance prediction needs memory >= 7");
    }
    double m = static_cast<double>(memory);
    double u = static_cast<double>(unique_edges);
    return (m - 3.0) * (u - 3.0) * (u - 4.0) * (u - 5.0) /
           (m * (m - 4.0) * (m - 5.0) * (m - 6.0));
}

double weight_second_moment_weighted(std::size_t memory,
                                     std::uint64_t unique_edges_prev) {
    if (memory < 5) {
        throw ProbeUnsupported("weighted variance prediction needs memory >= 5");
    }
    double m = static_cast<double>(memory);
    double u = static_cast<double>(unique_edges_prev);
    return (m - 2.0) * (u - 2.0) * (u - 3.0) / (m * (m - 3.0) * (m - 4.0));
}

double predicted_variance(const ProbeStream& probe, std::size_t memory, double delta,
                          Variant variant) {
    if (probe.bucket_lambda == 0) return 0.0;
    double psi = 1.0 - decay_power(delta, probe.bucket_lambda, probe.bucket_query);
    double second_moment = 0.0;
    switch (variant) {
        case Variant::furl_s:
        case Variant::furl_sx:
            second_moment = weight_second_moment_simple(memory, probe.t_lambda);
            break;
        case Variant::furl_mb:
        case Variant::furl_mxb:
            // Every probe edge is distinct, so u(t) == t.
            second_moment = weight_second_moment_binary(memory, probe.t_lambda);
            break;
        case Variant::furl_mw:
        case Variant::furl_mxw:
            second_moment = weight_second_moment_weighted(memory, probe.t_lambda - 1);
            break;
        case Variant::mascot:
            throw ProbeError("no variance prediction for mascot");
    }
    return psi * psi * (second_moment - 1.0);
}

namespace {

std::vector<double> collect_samples(const ProbeStream& probe,
                                    const EstimatorConfig& base, int n_trials,
                                    int threads) {
    validate_probe_stream(probe);
    std::vector<double> samples(n_trials);
    auto run_one = [&](int i) {
        EstimatorConfig cfg = base;
        cfg.seed = base.seed + static_cast<std::uint64_t>(i);
        cfg.hash_seed = base.hash_seed + static_cast<std::uint64_t>(i);
        Estimator est(cfg);
        for (Edge e : probe.edges) est.process(e);
        if (!est.overflow_time() || *est.overflow_time() != probe.overflow_time) {
            throw ProbeError("probe stream overflow time mismatch");
        }
        samples[i] = est.query(probe.triangle[0]);
    };
    int n_threads = threads > 0 ? threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    if (n_threads > n_trials) n_threads = n_trials;
    if (n_threads == 1) {
        for (int i = 0; i < n_trials; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n_trials; i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return samples;
}

struct Moments {
    double mean = 0.0;
    double var = 0.0;  // unbiased sample variance
    double m4 = 0.0;   // fourth central moment
    std::size_t n = 0;
};

Moments central_moments(const std::vector<double>& samples) {
    Moments m;
    m.n = samples.size();
    double sum = 0.0;
    for (double x : samples) sum += x;
    m.mean = sum / static_cast<double>(m.n);
    double s2 = 0.0, s4 = 0.0;
    for (double x : samples) {
        double d = x - m.mean;
        s2 += d * d;
        s4 += d * d * d * d;
    }
    if (m.n > 1) m.var = s2 / static_cast<double>(m.n - 1);
    m.m4 = s4 / static_cast<double>(m.n);
    return m;
}

}  // namespace

ProbeOutcome probe_expectation(const ProbeStream& probe, const EstimatorConfig& base,
                               int n_trials, int threads) {
    auto samples = collect_samples(probe, base, n_trials, threads);
    Moments m = central_moments(samples);
    ProbeOutcome out;
    out.predicted = predicted_expectation(base.delta, probe.bucket_lambda,
                                          probe.bucket_query);
    out.empirical = m.mean;
    out.stderr_value = std::sqrt(m.var / static_cast<double>(m.n));
    out.pass = std::abs(out.empirical - out.predicted) <= 3.0 * out.stderr_value ||
               out.empirical == out.predicted;
    return out;
}

ProbeOutcome probe_variance(const ProbeStream& probe, const EstimatorConfig& base,
                            int n_trials, int threads) {
    double predicted =
        predicted_variance(probe, base.memory, base.delta, base.variant);
    auto samples = collect_samples(probe, base, n_trials, threads);
    Moments m = central_moments(samples);
    ProbeOutcome out;
    out.predicted = predicted;
    out.empirical = m.var;
    double n = static_cast<double>(m.n);
    // Standard error of the sample variance from the empirical fourth moment.
    double se2 = (m.m4 - (n - 3.0) / (n - 1.0) * m.var * m.var) / n;
    out.stderr_value = se2 > 0.0 ? std::sqrt(se2) : 0.0;
    out.pass = std::abs(out.empirical - out.predicted) <= 5.0 * out.stderr_value ||
               out.empirical == out.predicted;
    return out;
}

std::uint64_t concentration_threshold(std::size_t memory, double delta) {
    if (memory < 3) throw std::invalid_argument("memory must be >= 3");
    if (!(delta >= 0.0 && delta < 1.0)) {
        throw std::invalid_argument("delta must satisfy 0 <= delta < 1");
    }
    long double rhs = (2.0L - static_cast<long double>(delta)) /
                      (1.0L - static_cast<long double>(delta)) *
                      static_cast<long double>(memory) *
                      static_cast<long double>(memory - 1);
    std::uint64_t t = static_cast<std::uint64_t>(1.5L + std::sqrt(rhs));
    t = t > 5 ? t - 3 : 3;
    auto above = [&](std::uint64_t x) {
        return static_cast<long double>(x - 1) * static_cast<long double>(x - 2) > rhs;
    };
    while (!above(t)) ++t;
    return t;
}

bool interval_strictly_included(double mean_in, double var_in, double mean_out,
                                double var_out) {
    return mean_in - var_in > mean_out - var_out &&
           mean_in + var_in < mean_out + var_out;
}

IntervalGridResult check_interval_inclusion(Variant variant, std::size_t memory,
                                            double delta, int max_bucket_gap,
                                            std::uint64_t parameter_limit) {
    double m = static_cast<double>(memory);
    long double start_real = 0.0L;
    switch (variant) {
        case Variant::furl_sx:
            start_real = std::sqrt(2.0L) * m + 1.0L;
            break;
        case Variant::furl_mxb:
            start_real = std::cbrt(2.0L) * m + 3.0L;
            break;
        case Variant::furl_mxw:
            start_real = std::sqrt(2.0L) * m + 2.0L;
            break;
        default:
            throw ProbeError("interval check targets smoothed variants");
    }
    std::uint64_t start = static_cast<std::uint64_t>(std::ceil(start_real));

    IntervalGridResult result;
    for (std::uint64_t param = start; param <= parameter_limit; ++param) {
        double second_moment = 0.0;
        switch (variant) {
            case Variant::furl_sx:
                second_moment = weight_second_moment_simple(memory, param);
                break;
            case Variant::furl_mxb:
                second_moment = weight_second_moment_binary(memory, param);
                break;
            default:
                second_moment = weight_second_moment_weighted(memory, param);
                break;
        }
        double var_raw = second_moment - 1.0;
        for (int gap = 1; gap <= max_bucket_gap; ++gap) {
            // Factored interval differences: with phi = delta^gap,
            //   (lower_in - lower_out) = phi ((q-1)(2-phi) - 1)
            //   (upper_out - upper_in) = phi (1 + (2-phi)(q-1))
            // which stay well-conditioned when phi is tiny.
            double phi = std::pow(delta, static_cast<double>(gap));
            double lower_margin = phi * (var_raw * (2.0 - phi) - 1.0);
            double upper_margin = phi * (1.0 + (2.0 - phi) * var_raw);
            ++result.checked;
            if (!(lower_margin > 0.0 && upper_margin > 0.0)) {
                ++result.violations;
            }
        }
    }
    return result;
}

}  // namespace furl
