#include <doctest.h>

#include <cmath>
#include <vector>

#include "furl/estimator.hpp"
#include "furl/metrics.hpp"
#include "furl/oracle.hpp"
#include "furl/stream.hpp"
#include "furl/synthetic.hpp"

using namespace furl;

namespace {

EstimatorConfig config(Variant v, std::size_t memory, double delta = 0.0,
                       std::uint64_t seed = 0, std::uint64_t hash_seed = 1) {
    EstimatorConfig cfg;
    cfg.variant = v;
    cfg.memory = memory;
    cfg.delta = delta;
    cfg.seed = seed;
    cfg.hash_seed = hash_seed;
    return cfg;
}

LocalCounts run_stream(const EstimatorConfig& cfg, const std::vector<Edge>& stream) {
    Estimator est(cfg);
    for (Edge e : stream) est.process(e);
    return est.query();
}

bool counts_match(const LocalCounts& a, const LocalCounts& b, double tol = 0.0) {
    for (const auto& [node, value] : a) {
        if (std::abs(count_of(b, node) - value) > tol) return false;
    }
    for (const auto& [node, value] : b) {
        if (std::abs(count_of(a, node) - value) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("estimation increments close wedges through common neighbors") {
    AdjacencyIndex adj;
    adj.add({1, 3});
    adj.add({2, 3});
    LocalCounts counts;
    increase_estimation(adj, counts, {1, 2}, 1.0);
    CHECK(counts[1] == 1.0);
    CHECK(counts[2] == 1.0);
    CHECK(counts[3] == 1.0);

    LocalCounts untouched;
    increase_estimation(adj, untouched, {5, 6}, 1.0);
    CHECK(untouched.empty());

    AdjacencyIndex two_wedges;
    two_wedges.add({1, 3});
    two_wedges.add({2, 3});
    two_wedges.add({1, 4});
    two_wedges.add({2, 4});
    LocalCounts scaled;
    increase_estimation(two_wedges, scaled, {1, 2}, 2.0);
    CHECK(scaled[3] == 2.0);
    CHECK(scaled[4] == 2.0);
    CHECK(scaled[1] == 4.0);
    CHECK(scaled[2] == 4.0);
}

TEST_CASE("weighted increments multiply occurrence counts") {
    SampleBuffer buf(8, BufferMode::min_hash, 1);
    buf.append({1, 3});
    buf.increment_occurrence({1, 3});
    buf.increment_occurrence({1, 3});  // occurrence 3
    buf.append({2, 3});
    buf.increment_occurrence({2, 3});  // occurrence 2
    LocalCounts counts;
    increase_estimation_weighted(buf, counts, {1, 2}, 1.0);
    CHECK(counts[1] == 6.0);
    CHECK(counts[2] == 6.0);
    CHECK(counts[3] == 6.0);
}

TEST_CASE("simple estimator counts a triangle exactly before overflow") {
    auto counts = run_stream(config(Variant::furl_s, 10),
                             {{1, 2}, {1, 3}, {2, 3}});
    CHECK(counts[1] == 1.0);
    CHECK(counts[2] == 1.0);
    CHECK(counts[3] == 1.0);
}

TEST_CASE("simple estimator weight after overflow matches the closing time") {
    // M=10; wedge edges at T=1,2; filler through T=11; closing edge at T=12.
    // When both wedge edges survive, each triangle node gains
    // 11*10/(10*9) = 1.2222...
    std::vector<Edge> stream = {{0, 1}, {0, 2}};
    for (NodeId k = 0; k < 9; ++k) {
        stream.push_back({static_cast<NodeId>(100 + k), static_cast<NodeId>(200 + k)});
    }
    const Edge closing{1, 2};
    const double weight = 11.0 * 10.0 / (10.0 * 9.0);

    bool found = false;
    for (std::uint64_t seed = 0; seed < 64 && !found; ++seed) {
        Estimator est(config(Variant::furl_s, 10, 0.0, seed));
        for (Edge e : stream) est.process(e);
        if (!(est.buffer().contains(Edge{0, 1}) && est.buffer().contains(Edge{0, 2}))) {
            continue;
        }
        found = true;
        LocalCounts before = est.raw_counts();
        est.process(closing);
        CHECK_FALSE(est.exact_counts());
        CHECK(est.raw_counts().at(0) ==
              doctest::Approx(before[0] + weight).epsilon(1e-12));
        CHECK(est.raw_counts().at(1) ==
              doctest::Approx(before[1] + weight).epsilon(1e-12));
        CHECK(est.raw_counts().at(2) ==
              doctest::Approx(before[2] + weight).epsilon(1e-12));
    }
    REQUIRE(found);
}

TEST_CASE("simple estimator stays exact through the first overflow event") {
    const std::size_t m = 12;
    auto edges = preprocess_simple(erdos_renyi(14, 0.35, 21));
    REQUIRE(edges.size() > m + 1);
    Estimator est(config(Variant::furl_s, m, 0.0, 5));
    std::vector<Edge> prefix;
    for (Edge e : edges) {
        est.process(e);
        prefix.push_back(e);
        if (est.time() <= m + 1) {
            CHECK(counts_match(est.raw_counts(), exact_local_simple(prefix)));
        }
    }
    CHECK(est.overflow_time().has_value());
    CHECK(*est.overflow_time() == m + 1);
}

TEST_CASE("binary multigraph estimator counts each triangle once") {
    std::vector<Edge> stream = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}};
    auto counts = run_stream(config(Variant::furl_mb, 50), stream);
    CHECK(counts[0] == 1.0);
    CHECK(counts[1] == 1.0);
    CHECK(counts[2] == 1.0);
}

TEST_CASE("binary multigraph estimator is exact while distinct edges fit") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto stream = random_multigraph(12, 120, seed);
        const std::size_t m = 20;
        Estimator est(config(Variant::furl_mb, m, 0.0, 0, seed + 50));
        std::vector<Edge> prefix;
        for (Edge e : stream) {
            est.process(e);
            prefix.push_back(e);
            CHECK(est.buffered_edges() <= m);
            if (!est.overflow_time() || est.time() <= *est.overflow_time()) {
                CHECK(counts_match(est.raw_counts(), exact_local_binary(prefix)));
            }
        }
    }
}

TEST_CASE("weighted multigraph estimator multiplies occurrences") {
    std::vector<Edge> stream = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}};
    auto counts = run_stream(config(Variant::furl_mw, 50), stream);
    CHECK(counts[0] == 6.0);
    CHECK(counts[1] == 6.0);
    CHECK(counts[2] == 6.0);

    // A duplicate that closes no wedge leaves counts unchanged.
    Estimator est(config(Variant::furl_mw, 50));
    est.process({0, 1});
    est.process({0, 1});
    CHECK(est.raw_counts().at(0) == 0.0);
    CHECK(est.raw_counts().at(1) == 0.0);
    CHECK(est.buffer().occurrence(Edge{0, 1}) == 2);
}

TEST_CASE("weighted multigraph estimator is exact while distinct edges fit") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto stream = random_multigraph(12, 120, seed);
        const std::size_t m = 20;
        Estimator est(config(Variant::furl_mw, m, 0.0, 0, seed + 50));
        std::vector<Edge> prefix;
        for (Edge e : stream) {
            est.process(e);
            prefix.push_back(e);
            CHECK(est.buffered_edges() <= m);
            if (!est.overflow_time() || est.time() <= *est.overflow_time()) {
                CHECK(counts_match(est.raw_counts(), exact_local_weighted(prefix)));
            }
        }
    }
}

TEST_CASE("overflow times reflect the count/sample ordering per variant") {
    // All-distinct stream: the buffer overflows at arrival M+1.
    const std::size_t m = 6;
    std::vector<Edge> distinct;
    for (NodeId k = 0; k < 10; ++k) {
        distinct.push_back({k, static_cast<NodeId>(k + 50)});
    }

    Estimator sx(config(Variant::furl_sx, m, 0.4));
    Estimator mxb(config(Variant::furl_mxb, m, 0.4));
    Estimator mxw(config(Variant::furl_mxw, m, 0.4));
    for (Edge e : distinct) {
        sx.process(e);
        mxb.process(e);
        mxw.process(e);
    }
    REQUIRE(sx.overflow_time().has_value());
    REQUIRE(mxb.overflow_time().has_value());
    REQUIRE(mxw.overflow_time().has_value());
    CHECK(*sx.overflow_time() == m + 1);
    CHECK(*mxb.overflow_time() == m);
    CHECK(*mxw.overflow_time() == m + 1);
}

TEST_CASE("smoothed query follows the copy/decay/blend rules") {
    // Reference smoothing maintained alongside the estimator from its own raw
    // counts: copy at the overflow time, decay at bucket boundaries, blend in
    // between.
    const std::size_t m = 8;
    const std::size_t j = 5;
    const double delta = 0.5;
    auto edges = preprocess_simple(erdos_renyi(16, 0.4, 3));
    REQUIRE(edges.size() > 40);

    EstimatorConfig cfg = config(Variant::furl_sx, m, delta, 11);
    cfg.bucket = j;
    Estimator est(cfg);
    LocalCounts reference_smoothed;
    for (Edge e : edges) {
        est.process(e);
        const LocalCounts& c = est.raw_counts();
        auto tm = est.overflow_time();
        if (tm) {
            if (est.time() == *tm) {
                reference_smoothed = c;
            } else if ((est.time() - *tm) % j == 0) {
                for (const auto& [node, raw] : c) {
                    double& s = reference_smoothed[node];
                    s = delta * s + (1.0 - delta) * raw;
                }
            }
        }
        LocalCounts expected;
        if (!tm || est.time() <= *tm) {
            expected = c;
        } else if ((est.time() - *tm) % j == 0) {
            expected = reference_smoothed;
        } else {
            for (const auto& [node, raw] : c) {
                expected[node] =
                    delta * count_of(reference_smoothed, node) + (1.0 - delta) * raw;
            }
        }
        CHECK(counts_match(est.query(), expected));
        for (const auto& [node, value] : expected) {
            CHECK(est.query(node) == value);
        }
    }
    CHECK(est.query(9999) == 0.0);
}

TEST_CASE("zero decay reproduces the raw estimator at every step") {
    auto simple = preprocess_simple(erdos_renyi(15, 0.4, 9));
    auto multi = duplicate_edges(erdos_renyi(12, 0.4, 10), 3, 11);

    struct Pair {
        Variant base, smoothed;
        const std::vector<Edge>* stream;
    };
    const Pair pairs[] = {
        {Variant::furl_s, Variant::furl_sx, &simple},
        {Variant::furl_mb, Variant::furl_mxb, &multi},
        {Variant::furl_mw, Variant::furl_mxw, &multi},
    };
    for (const Pair& p : pairs) {
        CAPTURE(variant_name(p.smoothed));
        Estimator base(config(p.base, 8, 0.0, 42, 7));
        Estimator smoothed(config(p.smoothed, 8, 0.0, 42, 7));
        for (Edge e : *p.stream) {
            base.process(e);
            smoothed.process(e);
            CHECK(counts_match(smoothed.query(), base.raw_counts()));
        }
    }
}

TEST_CASE("counts are nonnegative and never decrease") {
    auto multi = duplicate_edges(erdos_renyi(12, 0.4, 13), 3, 14);
    auto simple = preprocess_simple(multi);
    for (Variant v : {Variant::furl_s, Variant::furl_sx, Variant::furl_mb,
                      Variant::furl_mxb, Variant::furl_mw, Variant::furl_mxw}) {
        const auto& stream = is_simple_stream_variant(v) ? simple : multi;
        Estimator est(config(v, 6, 0.3, 1, 2));
        LocalCounts previous;
        for (Edge e : stream) {
            est.process(e);
            for (const auto& [node, value] : est.raw_counts()) {
                CHECK(value >= 0.0);
                CHECK(value >= count_of(previous, node));
            }
            previous = est.raw_counts();
        }
    }
}

TEST_CASE("identical configuration reproduces identical results") {
    auto stream = preprocess_simple(erdos_renyi(20, 0.3, 17));
    auto a = run_stream(config(Variant::furl_sx, 10, 0.4, 3), stream);
    auto b = run_stream(config(Variant::furl_sx, 10, 0.4, 3), stream);
    CHECK(counts_match(a, b));
}

TEST_CASE("baseline with p=1 counts exactly") {
    auto edges = preprocess_simple(erdos_renyi(15, 0.4, 19));
    EstimatorConfig cfg;
    cfg.variant = Variant::mascot;
    cfg.p = 1.0;
    auto counts = run_stream(cfg, edges);
    CHECK(counts_match(counts, exact_local_simple(edges)));
}

TEST_CASE("baseline keeps about p*m edges") {
    auto edges = preprocess_simple(erdos_renyi(20, 0.4, 23));
    const double p = 0.3;
    const int trials = 2000;
    double kept_sum = 0.0;
    for (int i = 0; i < trials; ++i) {
        EstimatorConfig cfg;
        cfg.variant = Variant::mascot;
        cfg.p = p;
        cfg.seed = static_cast<std::uint64_t>(i);
        Estimator est(cfg);
        for (Edge e : edges) est.process(e);
        kept_sum += static_cast<double>(est.buffered_edges());
    }
    double m = static_cast<double>(edges.size());
    double mean_kept = kept_sum / trials;
    double stderr_kept = std::sqrt(m * p * (1.0 - p) / trials);
    CHECK(std::abs(mean_kept - p * m) <= 3.0 * stderr_kept);
}

TEST_CASE("strict mode rejects duplicate arrivals on simple variants") {
    EstimatorConfig cfg = config(Variant::furl_s, 10);
    cfg.strict = true;
    Estimator est(cfg);
    est.process({1, 2});
    CHECK_THROWS_AS(est.process({2, 1}), std::invalid_argument);

    Estimator trusting(config(Variant::furl_s, 10));
    trusting.process({1, 2});
    CHECK_NOTHROW(trusting.process({2, 1}));
}

TEST_CASE("self-loops are rejected by the estimator") {
    Estimator est(config(Variant::furl_s, 10));
    CHECK_THROWS_AS(est.process({3, 3}), std::invalid_argument);
}

TEST_CASE("configuration guards enforce the minimum buffer sizes") {
    CHECK_THROWS_AS(config(Variant::furl_s, 2).validate(), std::invalid_argument);
    CHECK_NOTHROW(config(Variant::furl_s, 3).validate());
    CHECK_THROWS_AS(config(Variant::furl_mb, 3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(config(Variant::furl_mxb, 3, 0.4).validate(),
                    std::invalid_argument);
    CHECK_NOTHROW(config(Variant::furl_mb, 4).validate());
    CHECK_THROWS_AS(config(Variant::furl_mw, 2).validate(), std::invalid_argument);
    CHECK_NOTHROW(config(Variant::furl_mw, 3).validate());

    CHECK_THROWS_AS(config(Variant::furl_sx, 10, 1.0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(config(Variant::furl_sx, 10, -0.1).validate(),
                    std::invalid_argument);
    CHECK_NOTHROW(config(Variant::furl_sx, 10, 0.0).validate());

    EstimatorConfig mascot_cfg;
    mascot_cfg.variant = Variant::mascot;
    mascot_cfg.p = 0.0;
    CHECK_THROWS_AS(mascot_cfg.validate(), std::invalid_argument);
    mascot_cfg.p = 1.5;
    CHECK_THROWS_AS(mascot_cfg.validate(), std::invalid_argument);
    mascot_cfg.p = 0.5;
    CHECK_NOTHROW(mascot_cfg.validate());
}

TEST_CASE("variant names round-trip") {
    for (Variant v : {Variant::furl_s, Variant::furl_sx, Variant::furl_mb,
                      Variant::furl_mxb, Variant::furl_mw, Variant::furl_mxw,
                      Variant::mascot}) {
        auto parsed = variant_from_name(variant_name(v));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == v);
    }
    CHECK_FALSE(variant_from_name("furl-z").has_value());
}

TEST_CASE("per-node means stay near the exact counts over many runs") {
    // Smaller version of the statistical acceptance checks: 12-node graph,
    // 4000 trials, per-node mean within 3 standard errors of the truth.
    auto edges = preprocess_simple(erdos_renyi(12, 0.45, 29));
    const std::size_t m = edges.size() / 3;
    auto truth = exact_local_simple(edges);
    std::size_t n = node_count(edges);
    const int trials = 4000;

    std::vector<double> sum(n, 0.0), sumsq(n, 0.0);
    for (int i = 0; i < trials; ++i) {
        auto counts = run_stream(
            config(Variant::furl_s, m, 0.0, static_cast<std::uint64_t>(i)), edges);
        for (std::size_t u = 0; u < n; ++u) {
            double x = count_of(counts, static_cast<NodeId>(u));
            sum[u] += x;
            sumsq[u] += x * x;
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        double mean = sum[u] / trials;
        double var = (sumsq[u] - sum[u] * sum[u] / trials) / (trials - 1.0);
        double se = std::sqrt(std::max(var, 0.0) / trials);
        double target = count_of(truth, static_cast<NodeId>(u));
        CHECK(std::abs(mean - target) <= 3.0 * se + 1e-12);
    }
}
