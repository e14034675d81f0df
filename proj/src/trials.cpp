#include "furl/trials.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "furl/metrics.hpp"

namespace furl {

TrialSummary run_trials(const std::vector<Edge>& stream, std::size_t n_nodes,
                        const EstimatorConfig& base, int n_trials,
                        const LocalCounts& truth, const StreamStats& stats,
                        int threads) {
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
    base.validate();

    double xi = memory_proportion(base.variant, base.memory, base.p, stats);
    std::vector<NodeId> nodes = all_nodes(n_nodes);

    std::vector<std::vector<double>> finals(n_trials);
    std::vector<TrialReport> reports(n_trials);

    auto run_one = [&](int i) {
        EstimatorConfig cfg = base;
        cfg.seed = base.seed + static_cast<std::uint64_t>(i);
        cfg.hash_seed = base.hash_seed + static_cast<std::uint64_t>(i);
        auto start = std::chrono::steady_clock::now();
        Estimator est(cfg);
        for (Edge e : stream) est.process(e);
        LocalCounts final = est.query();
        auto stop = std::chrono::steady_clock::now();

        std::vector<double> dense(n_nodes, 0.0);
        for (const auto& [node, value] : final) {
            if (node < n_nodes) dense[node] = value;
        }
        finals[i] = std::move(dense);

        TrialReport& r = reports[i];
        r.variant = base.variant;
        r.xi = xi;
        r.delta = base.delta;
        r.bucket = base.variant == Variant::mascot ? 0 : cfg.bucket_or_default();
        r.seed = cfg.seed;
        r.mre = mre(final, truth, nodes);
        r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        r.n_nodes = stats.nodes;
        r.n_edges = stats.events;
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
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n_trials; i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Accumulate in trial order so the floating-point reduction is fixed.
    TrialSummary summary;
    summary.trials = std::move(reports);
    summary.mean.assign(n_nodes, 0.0);
    summary.stderr_combined.assign(n_nodes, 0.0);
    std::vector<double> sum(n_nodes, 0.0), sumsq(n_nodes, 0.0);
    for (int i = 0; i < n_trials; ++i) {
        for (std::size_t u = 0; u < n_nodes; ++u) {
            sum[u] += finals[i][u];
            sumsq[u] += finals[i][u] * finals[i][u];
        }
    }
    double n = static_cast<double>(n_trials);
    for (std::size_t u = 0; u < n_nodes; ++u) {
        summary.mean[u] = sum[u] / n;
        if (n_trials > 1) {
            double var = (sumsq[u] - sum[u] * sum[u] / n) / (n - 1.0);
            if (var < 0.0) var = 0.0;
            summary.stderr_combined[u] = std::sqrt(var / n);
        }
    }
    return summary;
}

}  // namespace furl
