#include "cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "bigmeans/algorithms.hpp"
#include "cli/bench.hpp"
#include "cli/verify.hpp"
#include "dataio/csv.hpp"
#include "dataio/result.hpp"
#include "dataio/synth.hpp"

namespace cli {
namespace {

namespace fs = std::filesystem;

/// Invalid flag combination or value; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    Range r;
    auto parse = [&](std::string_view part, long long& v) {
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        return ec == std::errc() && ptr == part.data() + part.size() && !part.empty();
    };
    const std::string_view sv(text);
    if (colon == std::string::npos || !parse(sv.substr(0, colon), r.lo) || !parse(sv.substr(colon + 1), r.hi))
        throw UsageError(std::string(flag) + " expects LO:HI, got '" + text + "'");
    if (r.lo > r.hi) throw UsageError(std::string(flag) + " needs LO <= HI");
    return r;
}

fs::path default_out_dir() {
    if (const char* dir = std::getenv("VLSBENCH_OUT_DIR"); dir && *dir) return dir;
    return fs::current_path();
}

/// Flags shared by `cluster` and `bench` that describe one algorithm run.
struct AlgoFlags {
    std::string algo = "bigmeans";
    long long clusters = 0;
    std::optional<long long> sample_size;
    std::optional<std::string> sample_range;
    std::optional<std::string> shake_range;
    long long iters = 100;
    int workers = 1;
    int phase_iterations = 10;
    std::optional<double> max_seconds;

    void add_to(CLI::App& app, bool clusters_required) {
        auto* p = app.add_option("--clusters,-p", clusters, "Number of clusters P");
        if (clusters_required) p->required();
        app.add_option("--algo", algo, "bigmeans | bigoptima | bigvns")
            ->check(CLI::IsMember({"bigmeans", "bigoptima", "bigvns"}));
        app.add_option("--sample-size,-s", sample_size, "Sample size S");
        app.add_option("--sample-range", sample_range, "Sample-size range LO:HI (bigoptima)");
        app.add_option("--shake-range", shake_range, "Solution-shake range LO:HI (bigvns)");
        app.add_option("--iters,-T", iters, "Iteration budget T per worker");
        app.add_option("--workers,-W", workers, "Parallel workers");
        app.add_option("--phase-iters", phase_iterations, "Data-phase length (bigoptima)");
        app.add_option("--max-seconds", max_seconds, "Wall-clock budget per worker");
    }

    bigmeans::BigMeansConfig build(std::size_t rows) const {
        bigmeans::BigMeansConfig cfg;
        cfg.algorithm = bigmeans::parse_algorithm(algo);
        if (clusters < 1) throw UsageError("--clusters must be >= 1");
        cfg.clusters = static_cast<std::size_t>(clusters);
        if (sample_size && sample_range) throw UsageError("--sample-size and --sample-range are exclusive");
        if (!sample_size && !sample_range) throw UsageError("one of --sample-size or --sample-range is required");
        if (sample_range && cfg.algorithm != bigmeans::Algorithm::bigoptima)
            throw UsageError("--sample-range is only valid with --algo bigoptima");
        if (shake_range && cfg.algorithm != bigmeans::Algorithm::bigvns)
            throw UsageError("--shake-range is only valid with --algo bigvns");
        if (sample_size) {
            if (*sample_size < 1) throw UsageError("--sample-size must be >= 1");
            cfg.sample_size = static_cast<std::size_t>(*sample_size);
            cfg.sample_min = cfg.sample_max = cfg.sample_size;
        } else {
            const auto r = parse_range(*sample_range, "--sample-range");
            if (r.lo < 1) throw UsageError("--sample-range needs LO >= 1");
            cfg.sample_min = static_cast<std::size_t>(r.lo);
            cfg.sample_max = static_cast<std::size_t>(r.hi);
        }
        if (cfg.algorithm == bigmeans::Algorithm::bigvns) {
            if (shake_range) {
                const auto r = parse_range(*shake_range, "--shake-range");
                cfg.shake_min = static_cast<int>(r.lo);
                cfg.shake_max = static_cast<int>(r.hi);
            } else {
                cfg.shake_min = 1;
                cfg.shake_max = static_cast<int>(cfg.clusters);
            }
        }
        if (iters < 1) throw UsageError("--iters must be >= 1");
        cfg.iterations = iters;
        cfg.workers = workers;
        cfg.phase_iterations = phase_iterations;
        cfg.max_seconds = max_seconds;
        try {
            bigmeans::validate(cfg, rows);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

std::map<std::string, std::string> config_echo(const bigmeans::BigMeansConfig& cfg) {
    std::map<std::string, std::string> echo{
        {"algo", bigmeans::to_string(cfg.algorithm)},
        {"clusters", std::to_string(cfg.clusters)},
        {"iters", std::to_string(cfg.iterations)},
        {"workers", std::to_string(cfg.workers)},
    };
    if (cfg.algorithm == bigmeans::Algorithm::bigoptima) {
        echo["sample_min"] = std::to_string(cfg.sample_min);
        echo["sample_max"] = std::to_string(cfg.sample_max);
        echo["phase_iters"] = std::to_string(cfg.phase_iterations);
    } else {
        echo["sample_size"] = std::to_string(cfg.sample_size);
    }
    if (cfg.algorithm == bigmeans::Algorithm::bigvns) {
        echo["shake_min"] = std::to_string(cfg.shake_min);
        echo["shake_max"] = std::to_string(cfg.shake_max);
    }
    if (cfg.max_seconds) echo["max_seconds"] = dataio::format_double(*cfg.max_seconds);
    return echo;
}

mssc::Dataset load(const std::string& path, const std::string& format, bool skip_header) {
    try {
        return dataio::load_dataset(path, {dataio::parse_format(format), skip_header});
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_cluster(const std::string& data_path, const std::string& format, bool skip_header, const AlgoFlags& flags,
                std::uint64_t seed, const std::optional<std::string>& out_opt, bool no_timing, std::ostream& out) {
    const auto data = load(data_path, format, skip_header);
    auto cfg = flags.build(data.rows());
    cfg.seed = seed;
    const auto result = bigmeans::cluster(data, cfg);

    dataio::ResultDocument doc;
    doc.algorithm = bigmeans::to_string(cfg.algorithm);
    doc.config = config_echo(cfg);
    doc.config["data"] = data_path;
    doc.config["format"] = format;
    doc.config["skip_header"] = skip_header ? "true" : "false";
    doc.seed = seed;
    doc.centroids = result.centroids.coords();
    doc.objective = result.objective;
    doc.partition_objective = result.partition_objective;
    doc.labels = result.labels.labels;
    doc.history = dataio::history_rows(result.record);
    doc.wall_time_ms = result.wall_ms;
    doc.notes = result.notes;
    for (const auto& f : result.failures)
        doc.notes.push_back("worker " + std::to_string(f.worker) + " failed: " + f.message);
    if (no_timing) {
        doc.wall_time_ms = 0.0;
        for (auto& row : doc.history) row.elapsed_ms = 0.0;
    }

    const fs::path out_path = out_opt ? fs::path(*out_opt) : default_out_dir() / "result.json";
    if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
    dataio::write_result(doc, out_path);
    dataio::write_history_csv(doc.history, dataio::history_sidecar(out_path));

    out << "algo=" << doc.algorithm << " objective=" << dataio::format_double(result.objective)
        << " wall_ms=" << dataio::format_double(doc.wall_time_ms) << " out=" << out_path.string() << '\n';
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sampling-based MSSC clustering, benchmarks and oracle checks", "vlsbench"};
    app.require_subcommand(1);

    // cluster
    auto* cluster = app.add_subcommand("cluster", "Cluster a dataset file and write a result document");
    std::string data_path;
    std::string format = "csv";
    bool skip_header = false;
    std::uint64_t seed = 0;
    std::optional<std::string> out_path;
    bool no_timing = false;
    AlgoFlags cluster_flags;
    cluster->add_option("--data", data_path, "Input matrix")->required();
    cluster->add_option("--format", format, "csv | whitespace");
    cluster->add_flag("--skip-header", skip_header, "Ignore the first non-blank line");
    cluster->add_option("--seed", seed, "Root seed");
    cluster->add_option("--out", out_path, "Result document path (default $VLSBENCH_OUT_DIR/result.json)");
    cluster->add_flag("--no-timing", no_timing, "Zero all wall-clock fields for reproducible artifacts");
    cluster_flags.add_to(*cluster, true);

    // bench
    auto* bench = app.add_subcommand("bench", "Compare an algorithm with best-of-K full-data K-means++ restarts");
    std::optional<std::string> bench_data;
    std::size_t centers = 5;
    double sigma = 0.05;
    std::size_t per_center = 2000;
    std::uint64_t data_seed = 7;
    int runs = 10;
    std::uint64_t seed_base = 1;
    int restarts = 10;
    std::optional<std::string> bench_out;
    AlgoFlags bench_flags;
    bench_flags.sample_size = 500;
    bench->add_option("--data", bench_data, "Input matrix (default: synthetic mixture)");
    bench->add_option("--format", format, "csv | whitespace");
    bench->add_flag("--skip-header", skip_header, "Ignore the first non-blank line");
    bench->add_option("--centers", centers, "Mixture centers on the unit grid");
    bench->add_option("--sigma", sigma, "Mixture noise");
    bench->add_option("--per-center", per_center, "Points per center");
    bench->add_option("--data-seed", data_seed, "Mixture seed");
    bench->add_option("--runs,-R", runs, "Number of seeds");
    bench->add_option("--seed-base", seed_base, "First seed");
    bench->add_option("--restarts,-K", restarts, "Baseline restarts per run");
    bench->add_option("--out", bench_out, "Artifact directory (default $VLSBENCH_OUT_DIR/bench)");
    bench_flags.add_to(*bench, false);

    // verify
    auto* verify = app.add_subcommand("verify", "Check algorithms against the exact optimum on tiny instances");
    VerifyOptions verify_opts;
    std::string corrupt;
    verify->add_option("--iters", verify_opts.bigmeans_iterations, "big_means iterations");
    verify->add_option("--seed", verify_opts.seed, "big_means seed");
    verify->add_option("--corrupt-objective", corrupt)->group("");

    // generate
    auto* generate = app.add_subcommand("generate", "Write a Gaussian mixture on the unit grid");
    std::string gen_out;
    std::optional<std::string> gen_labels;
    std::uint64_t gen_seed = 7;
    generate->add_option("--centers", centers, "Number of centers");
    generate->add_option("--sigma", sigma, "Noise");
    generate->add_option("--per-center", per_center, "Points per center");
    generate->add_option("--seed", gen_seed, "Seed");
    generate->add_option("--out", gen_out, "Output CSV")->required();
    generate->add_option("--labels", gen_labels, "Ground-truth label file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cluster)
            return cmd_cluster(data_path, format, skip_header, cluster_flags, seed, out_path, no_timing, out);

        if (*bench) {
            const auto data = bench_data
                                  ? load(*bench_data, format, skip_header)
                                  : dataio::gen_gaussian_mixture(dataio::unit_grid_centers(centers), sigma,
                                                                 per_center, data_seed)
                                        .data;
            if (bench_flags.clusters == 0) bench_flags.clusters = static_cast<long long>(centers);
            BenchOptions opts;
            opts.algorithm = bench_flags.build(data.rows());
            opts.runs = runs;
            opts.seed_base = seed_base;
            opts.restarts = restarts;
            if (runs < 1 || restarts < 1) throw UsageError("--runs and --restarts must be >= 1");
            const auto report = run_benchmark(data, opts);
            const fs::path dir = bench_out ? fs::path(*bench_out) : default_out_dir() / "bench";
            write_bench_artifacts(report, dir);
            out << format_table(report) << "artifacts: " << dir.string() << '\n';
            return kExitOk;
        }

        if (*verify) {
            if (!corrupt.empty()) verify_opts.corrupt_instance = corrupt;
            const auto report = run_verify(tiny_suite(), verify_opts);
            std::size_t passed = 0;
            for (const auto& c : report.instances) {
                if (c.violations.empty()) {
                    ++passed;
                    continue;
                }
                for (const auto& v : c.violations) err << "FAIL " << c.name << ": " << v << '\n';
            }
            out << "verify: " << passed << "/" << report.instances.size() << " instances passed\n";
            return report.ok() ? kExitOk : kExitFailure;
        }

        if (*generate) {
            if (!(sigma > 0.0) || centers < 1 || per_center < 1)
                throw UsageError("generate needs sigma > 0, centers >= 1, per-center >= 1");
            const auto mix =
                dataio::gen_gaussian_mixture(dataio::unit_grid_centers(centers), sigma, per_center, gen_seed);
            dataio::write_matrix(gen_out, mix.data.view());
            if (gen_labels) dataio::write_labels(mix.labels, *gen_labels);
            out << "wrote " << mix.data.rows() << "x" << mix.data.cols() << " to " << gen_out << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const dataio::ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace cli
