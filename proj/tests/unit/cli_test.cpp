#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/bench.hpp"
#include "cli/commands.hpp"
#include "cli/verify.hpp"
#include "dataio/csv.hpp"
#include "dataio/result.hpp"
#include "dataio/synth.hpp"
#include "mssc/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"

namespace {

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "vlsbench");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override { dataio::write_matrix(dir / "four.csv", fixtures::four_points().view()); }
    std::string path(const std::string& name) const { return (dir / name).string(); }

    fixtures::TempDir dir;
};

TEST_F(CliTest, ClusterFourPoints) {
    const auto r = run({"cluster", "--data", path("four.csv"), "-p", "2", "-s", "4", "-T", "20",
                        "--seed", "3", "--out", path("r.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("objective=4 "), std::string::npos) << r.out;
    const auto doc = dataio::read_result(dir / "r.json");
    EXPECT_EQ(doc.algorithm, "bigmeans");
    EXPECT_EQ(doc.objective, 4.0);
    EXPECT_EQ(doc.labels.size(), 4u);
    EXPECT_EQ(doc.history.size(), 20u);
    EXPECT_TRUE(std::filesystem::exists(dir / "r.history.csv"));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "-s", "0", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "--sample-range", "2:4", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "-s", "9", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "-s", "4", "--shake-range", "0:1", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "--algo", "bigoptima", "--sample-range", "4:2", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "--data", path("four.csv"), "-p", "2", "--algo", "nope", "-s", "4", "--out", path("a.json")}).code, 2);
    EXPECT_EQ(run({"cluster", "-p", "2", "-s", "4"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_FALSE(std::filesystem::exists(dir / "a.json"));
}

TEST_F(CliTest, MalformedInputIsReported) {
    std::ofstream(dir / "bad.csv") << "1,2\n3\n";
    const auto r = run({"cluster", "--data", path("bad.csv"), "-p", "1", "-s", "1", "--out", path("b.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
}

TEST_F(CliTest, NoTimingDocumentsAreByteIdentical) {
    for (const char* algo : {"bigmeans", "bigoptima", "bigvns"}) {
        std::vector<std::string> base{"cluster", "--data", path("four.csv"), "-p", "2", "--algo", algo,
                                      "-T", "15", "-W", "2", "--seed", "9", "--no-timing"};
        if (std::string(algo) == "bigoptima") {
            base.insert(base.end(), {"--sample-range", "2:4", "--phase-iters", "3"});
        } else {
            base.insert(base.end(), {"-s", "3"});
        }
        auto a = base, b = base;
        a.insert(a.end(), {"--out", path("a.json")});
        b.insert(b.end(), {"--out", path("sub/b.json")});
        ASSERT_EQ(run(a).code, 0) << algo;
        ASSERT_EQ(run(b).code, 0) << algo;
        auto ja = slurp(dir / "a.json");
        auto jb = slurp(dir / "sub/b.json");
        // Only the sidecar name differs.
        const auto pos = jb.find("\"b.labels\"");
        ASSERT_NE(pos, std::string::npos);
        jb.replace(pos, 10, "\"a.labels\"");
        EXPECT_EQ(ja, jb) << algo;
        EXPECT_EQ(slurp(dir / "a.labels"), slurp(dir / "sub/b.labels"));
        EXPECT_EQ(slurp(dir / "a.history.csv"), slurp(dir / "sub/b.history.csv"));
    }
}

TEST_F(CliTest, VerifySucceedsAndCorruptionIsNamed) {
    const auto ok = run({"verify"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_NE(ok.out.find("verify: 20/20"), std::string::npos) << ok.out;

    const auto bad = run({"verify", "--corrupt-objective", "rand-3"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("FAIL rand-3"), std::string::npos) << bad.err;
    EXPECT_NE(bad.out.find("19/20"), std::string::npos) << bad.out;
}

TEST_F(CliTest, GenerateWritesMixture) {
    const auto r = run({"generate", "--centers", "3", "--per-center", "10", "--out", path("g.csv"),
                        "--labels", path("g.labels")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(dataio::load_dataset(dir / "g.csv").rows(), 30u);
    EXPECT_EQ(dataio::read_labels(dir / "g.labels").size(), 30u);
    EXPECT_EQ(run({"generate", "--sigma", "0", "--out", path("h.csv")}).code, 2);
}

TEST_F(CliTest, BenchWritesTableAndHistories) {
    const auto r = run({"bench", "--per-center", "200", "--centers", "3", "-s", "100", "-T", "10", "-R", "4",
                        "-K", "2", "--out", path("bench")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(std::filesystem::exists(dir / "bench/bench_table.csv"));
    std::size_t histories = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir / "bench"))
        if (e.path().string().ends_with(".history.csv")) ++histories;
    EXPECT_EQ(histories, 4u);
}

TEST(Bench, GapAndBaselineArithmetic) {
    const auto data = dataio::gen_gaussian_mixture(dataio::unit_grid_centers(3), 0.1, 150, 4).data;
    cli::BenchOptions opts;
    opts.algorithm.clusters = 3;
    opts.algorithm.sample_size = 60;
    opts.algorithm.iterations = 10;
    opts.runs = 3;
    opts.seed_base = 5;
    opts.restarts = 3;
    const auto report = cli::run_benchmark(data, opts);
    ASSERT_EQ(report.rows.size(), 3u);
    std::vector<double> gaps;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& row = report.rows[i];
        EXPECT_EQ(row.seed, 5u + i);
        EXPECT_EQ(row.baseline_objective, cli::best_of_restarts(data, 3, 3, row.seed));
        EXPECT_DOUBLE_EQ(row.relative_gap, (row.algorithm_objective - row.baseline_objective) / row.baseline_objective);
        EXPECT_EQ(row.history.size(), 10u);
        gaps.push_back(row.relative_gap);
    }
    EXPECT_EQ(report.summary.median_gap, cli::median(gaps));
    EXPECT_EQ(cli::median({3.0, 1.0, 2.0}), 2.0);
    EXPECT_EQ(cli::median({4.0, 1.0, 2.0, 3.0}), 2.5);
    EXPECT_NE(cli::format_table(report).find("bigmeans"), std::string::npos);
}

TEST(Bench, BaselineIsBestOfIndependentRestarts) {
    const mssc::Dataset data(fixtures::four_points());
    double best = INFINITY;
    for (int r = 0; r < 4; ++r) {
        auto rng = vls::make_stream(8, static_cast<std::uint64_t>(r), vls::Stream::init);
        best = std::min(best, mssc::kmeans(data.view(), mssc::kmeanspp_init(data.view(), 2, rng)).objective);
    }
    EXPECT_EQ(cli::best_of_restarts(data, 2, 4, 8), best);
}

TEST(Verify, SuiteIsWithinOracleBounds) {
    const auto suite = cli::tiny_suite();
    ASSERT_EQ(suite.size(), 20u);
    bool has_full = false;
    for (const auto& inst : suite) {
        EXPECT_LE(inst.points.rows(), mssc::kOracleMaxPoints);
        EXPECT_LE(inst.clusters, mssc::kOracleMaxClusters);
        has_full = has_full || inst.clusters == inst.points.rows();
    }
    EXPECT_TRUE(has_full);
    const auto report = cli::run_verify(suite);
    EXPECT_TRUE(report.ok());
    for (const auto& c : report.instances) {
        EXPECT_GE(c.bigmeans, c.oracle * (1 - 1e-9) - 1e-12) << c.name;
        EXPECT_GE(c.best_seeded_kmeans, c.oracle * (1 - 1e-9) - 1e-12) << c.name;
    }
}

} // namespace
