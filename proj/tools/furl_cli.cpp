// Command-line frontend: ingestion, estimation, evaluation, parameter sweeps,
// degree/triangle scatter export, and statistical probes.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "furl/csv.hpp"
#include "furl/estimator.hpp"
#include "furl/metrics.hpp"
#include "furl/oracle.hpp"
#include "furl/probes.hpp"
#include "furl/stream.hpp"
#include "furl/trials.hpp"

namespace {

using namespace furl;

struct OutputTarget {
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

struct RunOptions {
    std::string input;
    std::string output;
    std::string variant_name = "furl-s";
    std::size_t memory = 0;
    double xi = 0.0;
    std::size_t bucket = 0;
    double delta = 0.4;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t hash_seed = 1;
    int trials = 10;
    bool shuffle = false;

    Variant variant() const {
        auto v = variant_from_name(variant_name);
        if (!v) throw std::invalid_argument("unknown variant " + variant_name);
        return *v;
    }
};

void add_common_flags(CLI::App* cmd, RunOptions& opt, bool with_variant = true) {
    cmd->add_option("--input", opt.input, "edge-list file")->required();
    cmd->add_option("--output", opt.output, "output CSV path (default: stdout)");
    if (with_variant) {
        cmd->add_option("--variant", opt.variant_name,
                        "furl-s|furl-sx|furl-mb|furl-mxb|furl-mw|furl-mxw|mascot");
        auto* mem = cmd->add_option("--memory", opt.memory, "buffer capacity");
        auto* xi = cmd->add_option("--xi", opt.xi, "memory proportion in (0,1]");
        mem->excludes(xi);
        xi->excludes(mem);
        cmd->add_option("--bucket", opt.bucket, "smoothing interval (default: memory)");
        cmd->add_option("--delta", opt.delta, "decaying factor in [0,1)");
        cmd->add_option("--p", opt.p, "mascot sampling probability");
        cmd->add_option("--seed", opt.seed, "reservoir RNG seed");
        cmd->add_option("--hash-seed", opt.hash_seed, "edge hash seed");
        cmd->add_flag("--shuffle", opt.shuffle, "shuffle the stream with --seed");
    }
}

EstimatorConfig make_config(const RunOptions& opt, const StreamStats& stats) {
    EstimatorConfig cfg;
    cfg.variant = opt.variant();
    if (cfg.variant == Variant::mascot) {
        if (opt.p <= 0.0) throw std::invalid_argument("mascot requires --p");
        cfg.p = opt.p;
    } else if (opt.memory > 0) {
        cfg.memory = opt.memory;
    } else if (opt.xi > 0.0) {
        cfg.memory = resolve_memory(cfg.variant, opt.xi, stats);
    } else {
        throw std::invalid_argument("one of --memory or --xi is required");
    }
    cfg.bucket = opt.bucket;
    cfg.delta = is_smoothed_variant(cfg.variant) ? opt.delta : 0.0;
    cfg.seed = opt.seed;
    cfg.hash_seed = opt.hash_seed;
    cfg.validate();
    return cfg;
}

std::vector<Edge> load_stream(const RunOptions& opt, NodeInterner& interner) {
    EdgeList list = read_edge_file(opt.input);
    interner = std::move(list.interner);
    std::vector<Edge> stream = std::move(list.edges);
    if (opt.shuffle) stream = shuffle_stream(std::move(stream), opt.seed);
    return stream;
}

LocalCounts truth_for(Variant variant, const std::vector<Edge>& stream) {
    if (variant == Variant::furl_mw || variant == Variant::furl_mxw) {
        return exact_local_weighted(stream);
    }
    return exact_local_binary(stream);
}

int cmd_preprocess(const RunOptions& opt, const std::string& mode) {
    EdgeList list = read_edge_file(opt.input);
    std::vector<Edge> processed = mode == "simple" ? preprocess_simple(list.edges)
                                                   : preprocess_multi(list.edges);
    StreamStats stats = stream_stats(processed);
    OutputTarget out(opt.output);
    for (Edge e : processed) {
        out.stream() << list.interner.token(e.a) << ' ' << list.interner.token(e.b)
                     << '\n';
    }
    std::cerr << "nodes=" << stats.nodes << " edges=" << stats.events
              << " distinct=" << stats.distinct << '\n';
    return 0;
}

int cmd_estimate(const RunOptions& opt) {
    NodeInterner interner;
    std::vector<Edge> stream = load_stream(opt, interner);
    StreamStats stats = stream_stats(stream);
    EstimatorConfig cfg = make_config(opt, stats);

    auto start = std::chrono::steady_clock::now();
    Estimator est(cfg);
    std::size_t peak = 0;
    for (Edge e : stream) {
        est.process(e);
        peak = std::max(peak, est.buffered_edges());
    }
    LocalCounts counts = est.query();
    auto stop = std::chrono::steady_clock::now();

    OutputTarget out(opt.output);
    write_estimates_csv(out.stream(), counts, interner);
    std::cerr << "peak_buffer=" << peak << " wall_ms="
              << std::chrono::duration<double, std::milli>(stop - start).count()
              << '\n';
    return 0;
}

int cmd_evaluate(const RunOptions& opt) {
    NodeInterner interner;
    std::vector<Edge> stream = load_stream(opt, interner);
    StreamStats stats = stream_stats(stream);
    EstimatorConfig cfg = make_config(opt, stats);
    LocalCounts truth = truth_for(cfg.variant, stream);

    TrialSummary summary = run_trials(stream, interner.size(), cfg, opt.trials, truth,
                                      stats);
    OutputTarget out(opt.output);
    write_report_header(out.stream());
    TrialReport mean{};
    for (const TrialReport& r : summary.trials) {
        write_report_row(out.stream(), r);
        mean.xi = r.xi;
        mean.delta = r.delta;
        mean.bucket = r.bucket;
        mean.variant = r.variant;
        mean.n_nodes = r.n_nodes;
        mean.n_edges = r.n_edges;
        mean.mre += r.mre;
        mean.wall_ms += r.wall_ms;
    }
    mean.mre /= static_cast<double>(summary.trials.size());
    mean.wall_ms /= static_cast<double>(summary.trials.size());
    write_report_row(out.stream(), mean, "mean");
    return 0;
}

int cmd_sweep(const RunOptions& opt, const std::vector<double>& xis,
              const std::vector<double>& deltas) {
    NodeInterner interner;
    std::vector<Edge> stream = load_stream(opt, interner);
    StreamStats stats = stream_stats(stream);
    Variant variant = opt.variant();
    LocalCounts truth = truth_for(variant, stream);

    std::vector<double> delta_grid = deltas;
    if (!is_smoothed_variant(variant) || delta_grid.empty()) delta_grid = {0.0};

    OutputTarget out(opt.output);
    write_report_header(out.stream());
    for (double xi : xis) {
        for (double delta : delta_grid) {
            RunOptions local = opt;
            local.memory = 0;
            local.xi = xi;
            local.delta = delta;
            EstimatorConfig cfg = make_config(local, stats);
            TrialSummary summary = run_trials(stream, interner.size(), cfg, opt.trials,
                                              truth, stats);
            for (const TrialReport& r : summary.trials) {
                write_report_row(out.stream(), r);
            }
        }
    }
    return 0;
}

int cmd_scatter(const RunOptions& opt) {
    NodeInterner interner;
    std::vector<Edge> stream = load_stream(opt, interner);
    StreamStats stats = stream_stats(stream);
    EstimatorConfig cfg = make_config(opt, stats);

    Estimator est(cfg);
    for (Edge e : stream) est.process(e);
    LocalCounts counts = est.query();
    std::vector<std::size_t> degrees = stream_degrees(stream, interner.size());

    OutputTarget out(opt.output);
    write_scatter_csv(out.stream(), degrees, counts, interner);
    return 0;
}

int cmd_probe(const RunOptions& opt, const std::string& kind, int lambda_bucket,
              int query_bucket) {
    OutputTarget out(opt.output);
    out.stream() << "quantity,empirical,predicted,stderr,pass\n";
    if (kind == "threshold") {
        if (opt.memory == 0) throw std::invalid_argument("--memory is required");
        std::uint64_t t = concentration_threshold(opt.memory, opt.delta);
        double ratio = static_cast<double>(t) / static_cast<double>(opt.memory);
        out.stream() << "threshold_time," << t << ',' << t << ",0,pass\n";
        out.stream() << "threshold_ratio," << format_value(ratio) << ','
                     << format_value(ratio) << ",0,pass\n";
        return 0;
    }

    Variant variant = opt.variant();
    if (!is_smoothed_variant(variant)) {
        throw std::invalid_argument("probe kind " + kind +
                                    " needs a smoothed variant (furl-sx/mxb/mxw)");
    }
    if (opt.memory == 0) throw std::invalid_argument("--memory is required");
    EstimatorConfig cfg;
    cfg.variant = variant;
    cfg.memory = opt.memory;
    cfg.bucket = opt.bucket;
    cfg.delta = opt.delta;
    cfg.seed = opt.seed;
    cfg.hash_seed = opt.hash_seed;
    cfg.validate();

    ProbeStream probe = make_probe_stream(variant, cfg.memory, cfg.bucket_or_default(),
                                          lambda_bucket, query_bucket);
    ProbeOutcome outcome;
    if (kind == "expectation") {
        outcome = probe_expectation(probe, cfg, opt.trials);
        out.stream() << "expectation,";
    } else if (kind == "variance") {
        outcome = probe_variance(probe, cfg, opt.trials);
        out.stream() << "variance,";
    } else {
        throw std::invalid_argument("unknown probe kind " + kind);
    }
    out.stream() << format_value(outcome.empirical) << ','
                 << format_value(outcome.predicted) << ','
                 << format_value(outcome.stderr_value) << ','
                 << (outcome.pass ? "pass" : "fail") << '\n';
    return outcome.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-memory local triangle counting over edge streams"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string mode = "simple";
    std::string kind;
    int lambda_bucket = 1;
    int query_bucket = 1;
    std::vector<double> xis;
    std::vector<double> deltas;

    auto* preprocess = app.add_subcommand("preprocess", "canonicalize an edge list");
    add_common_flags(preprocess, opt, false);
    preprocess->add_option("--mode", mode, "simple|multi")
        ->check(CLI::IsMember({"simple", "multi"}));

    auto* estimate = app.add_subcommand("estimate", "stream once, export estimates");
    add_common_flags(estimate, opt);

    auto* evaluate = app.add_subcommand("evaluate", "multi-seed error report");
    add_common_flags(evaluate, opt);
    evaluate->add_option("--trials", opt.trials, "number of independent runs");

    auto* sweep = app.add_subcommand("sweep", "error report over a parameter grid");
    add_common_flags(sweep, opt);
    sweep->add_option("--trials", opt.trials, "number of independent runs");
    sweep->add_option("--xis", xis, "memory proportions")->delimiter(',')->required();
    sweep->add_option("--deltas", deltas, "decaying factors")->delimiter(',');

    auto* scatter = app.add_subcommand("scatter", "degree vs estimate export");
    add_common_flags(scatter, opt);

    auto* probe = app.add_subcommand("probe", "statistical checks of the estimators");
    probe->add_option("--kind", kind, "expectation|variance|threshold")->required();
    probe->add_option("--output", opt.output, "output path (default: stdout)");
    probe->add_option("--variant", opt.variant_name, "smoothed variant");
    probe->add_option("--memory", opt.memory, "buffer capacity")->required();
    probe->add_option("--bucket", opt.bucket, "smoothing interval (default: memory)");
    probe->add_option("--delta", opt.delta, "decaying factor in [0,1)");
    probe->add_option("--seed", opt.seed, "reservoir RNG seed");
    probe->add_option("--hash-seed", opt.hash_seed, "edge hash seed");
    probe->add_option("--trials", opt.trials, "number of independent runs");
    probe->add_option("--lambda-bucket", lambda_bucket,
                      "bucket in which the probed triangle closes (0 = exact phase)");
    probe->add_option("--query-bucket", query_bucket, "bucket at which to query");

    CLI11_PARSE(app, argc, argv);

    try {
        if (preprocess->parsed()) return cmd_preprocess(opt, mode);
        if (estimate->parsed()) return cmd_estimate(opt);
        if (evaluate->parsed()) return cmd_evaluate(opt);
        if (sweep->parsed()) return cmd_sweep(opt, xis, deltas);
        if (scatter->parsed()) return cmd_scatter(opt);
        if (probe->parsed()) return cmd_probe(opt, kind, lambda_bucket, query_bucket);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
