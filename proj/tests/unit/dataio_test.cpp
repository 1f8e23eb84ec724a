#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "dataio/csv.hpp"
#include "dataio/result.hpp"
#include "dataio/synth.hpp"
#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"

namespace {

mssc::Dataset parse(const std::string& text, dataio::LoadOptions opts = {}) {
    std::istringstream in(text);
    return dataio::parse_dataset(in, opts, "mem");
}

std::size_t error_line(const std::string& text, dataio::LoadOptions opts = {}) {
    try {
        parse(text, opts);
    } catch (const dataio::ParseError& e) {
        return e.line();
    }
    return 0;
}

TEST(Csv, ReadsMatrix) {
    const auto d = parse("1,2\n3,4\n5,6\n");
    EXPECT_EQ(d.rows(), 3u);
    EXPECT_EQ(d.cols(), 2u);
    EXPECT_EQ(d.matrix(), fixtures::rows(2, {1, 2, 3, 4, 5, 6}));
}

TEST(Csv, BlankLinesSpacesAndNumberForms) {
    const auto d = parse("\n 1.5 , -2e3\r\n\n+4,1E-2\n\n");
    EXPECT_EQ(d.matrix(), fixtures::rows(2, {1.5, -2000, 4, 0.01}));
}

TEST(Csv, SkipHeader) {
    dataio::LoadOptions opts;
    opts.skip_header = true;
    EXPECT_EQ(parse("x,y\n1,2\n", opts).matrix(), fixtures::rows(2, {1, 2}));
    EXPECT_EQ(error_line("x,y\n1,2\n"), 1u);
}

TEST(Csv, RaggedRowNamesItsLine) {
    EXPECT_EQ(error_line("1,2\n3,4\n5\n"), 3u);
    try {
        parse("1,2\n\n3,4,5\n");
        FAIL();
    } catch (const dataio::ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("ragged"), std::string::npos);
    }
}

TEST(Csv, RejectsBadCells) {
    EXPECT_EQ(error_line("1,2\nnan,3\n"), 2u);
    EXPECT_EQ(error_line("1,inf\n"), 1u);
    EXPECT_EQ(error_line("1,abc\n"), 1u);
    EXPECT_EQ(error_line("1,,2\n"), 1u);
    EXPECT_EQ(error_line("1,2x\n"), 1u);
    EXPECT_EQ(error_line("1,1e999\n"), 1u);
    EXPECT_THROW(parse(""), dataio::ParseError);
    EXPECT_THROW(parse("\n\n"), dataio::ParseError);
}

TEST(Csv, WhitespaceFormat) {
    dataio::LoadOptions opts;
    opts.format = dataio::parse_format("whitespace");
    EXPECT_EQ(parse("1 2\t3\n  4   5 6 \n", opts).matrix(), fixtures::rows(3, {1, 2, 3, 4, 5, 6}));
    EXPECT_THROW(dataio::parse_format("tsv"), std::invalid_argument);
}

TEST(Csv, WriteReadRoundTrip) {
    fixtures::TempDir dir;
    auto rng = vls::make_stream(1, 0, vls::Stream::init);
    const auto m = fixtures::random_points(rng, 40, 3, -1e6, 1e6);
    for (const auto fmt : {dataio::TextFormat::csv, dataio::TextFormat::whitespace}) {
        dataio::write_matrix(dir / "m.txt", m.view(), fmt);
        dataio::LoadOptions opts;
        opts.format = fmt;
        EXPECT_EQ(dataio::load_dataset(dir / "m.txt", opts).matrix(), m);
    }
    EXPECT_THROW(dataio::load_dataset(dir / "missing.csv"), std::runtime_error);
}

TEST(Synth, ShapeAndGrouping) {
    const auto mix = dataio::gen_gaussian_mixture(dataio::unit_grid_centers(5), 0.05, 2000, 7);
    EXPECT_EQ(mix.data.rows(), 10000u);
    EXPECT_EQ(mix.data.cols(), 2u);
    ASSERT_EQ(mix.labels.size(), 10000u);
    for (std::size_t i = 0; i < 10000; ++i) EXPECT_EQ(mix.labels[i], static_cast<int>(i / 2000));
    EXPECT_EQ(mix.centers, fixtures::rows(2, {0, 0, 1, 0, 2, 0, 0, 1, 1, 1}));
}

TEST(Synth, TinySigmaHugsCenters) {
    const auto mix = dataio::gen_gaussian_mixture(dataio::unit_grid_centers(4), 1e-9, 50, 3);
    for (std::size_t i = 0; i < mix.data.rows(); ++i) {
        const auto c = mix.centers.row(static_cast<std::size_t>(mix.labels[i]));
        for (std::size_t j = 0; j < 2; ++j) EXPECT_LE(std::abs(mix.data.view()(i, j) - c[j]), 1e-6);
    }
}

TEST(Synth, DeterministicAndValidated) {
    const auto centers = dataio::unit_grid_centers(3);
    const auto a = dataio::gen_gaussian_mixture(centers, 0.2, 100, 11);
    const auto b = dataio::gen_gaussian_mixture(centers, 0.2, 100, 11);
    const auto c = dataio::gen_gaussian_mixture(centers, 0.2, 100, 12);
    EXPECT_EQ(a.data.matrix(), b.data.matrix());
    EXPECT_NE(a.data.matrix(), c.data.matrix());
    EXPECT_THROW(dataio::gen_gaussian_mixture(centers, 0.0, 100, 1), std::invalid_argument);
    EXPECT_THROW(dataio::gen_gaussian_mixture(centers, 0.1, 0, 1), std::invalid_argument);
    EXPECT_THROW(dataio::gen_gaussian_mixture(mssc::Matrix(0, 2), 0.1, 10, 1), std::invalid_argument);
}

dataio::ResultDocument random_document(vls::Rng& rng) {
    std::uniform_real_distribution<double> u(-1e9, 1e9);
    dataio::ResultDocument doc;
    const char* algos[] = {"bigmeans", "bigoptima", "bigvns"};
    doc.algorithm = algos[vls::uniform_int(rng, 0, 2)];
    const auto keys = vls::uniform_int(rng, 0, 4);
    for (int i = 0; i < keys; ++i) doc.config["key" + std::to_string(i)] = std::to_string(u(rng));
    doc.seed = rng();
    const auto p = static_cast<std::size_t>(vls::uniform_int(rng, 1, 5));
    const auto n = static_cast<std::size_t>(vls::uniform_int(rng, 1, 4));
    doc.centroids = fixtures::random_points(rng, p, n, -1e9, 1e9);
    doc.objective = std::abs(u(rng));
    doc.partition_objective = std::abs(u(rng));
    const auto m = vls::uniform_int(rng, 1, 50);
    for (int i = 0; i < m; ++i) doc.labels.push_back(static_cast<int>(vls::uniform_int(rng, 0, static_cast<std::int64_t>(p) - 1)));
    const auto T = vls::uniform_int(rng, 0, 20);
    for (int t = 0; t < T; ++t)
        doc.history.push_back({t, t % 3 == 2 ? "formulation" : "data", static_cast<int>(vls::uniform_int(rng, 0, 3)),
                               static_cast<std::size_t>(vls::uniform_int(rng, 1, 1000)), std::abs(u(rng)),
                               vls::uniform_int(rng, 0, 1) == 1, std::abs(u(rng)) * 1e-9});
    doc.wall_time_ms = std::abs(u(rng)) * 1e-6;
    if (vls::uniform_int(rng, 0, 1)) doc.notes.push_back("note " + std::to_string(rng()));
    return doc;
}

TEST(Result, RoundTripsRandomDocuments) {
    fixtures::TempDir dir;
    auto rng = vls::make_stream(2, 0, vls::Stream::init);
    for (int i = 0; i < 50; ++i) {
        auto doc = random_document(rng);
        const auto path = dir / ("doc" + std::to_string(i) + ".json");
        dataio::write_result(doc, path);
        EXPECT_EQ(doc.labels_path, "doc" + std::to_string(i) + ".labels");
        EXPECT_TRUE(std::filesystem::exists(dataio::labels_sidecar(path)));
        EXPECT_EQ(dataio::read_result(path), doc) << "document " << i;
    }
}

TEST(Result, RejectsNonFiniteValues) {
    fixtures::TempDir dir;
    auto rng = vls::make_stream(3, 0, vls::Stream::init);
    auto doc = random_document(rng);
    doc.objective = std::nan("");
    EXPECT_THROW(dataio::write_result(doc, dir / "a.json"), std::invalid_argument);
    doc = random_document(rng);
    doc.centroids(0, 0) = INFINITY;
    EXPECT_THROW(dataio::write_result(doc, dir / "b.json"), std::invalid_argument);
}

TEST(Result, VersionIsChecked) {
    fixtures::TempDir dir;
    auto rng = vls::make_stream(4, 0, vls::Stream::init);
    auto doc = random_document(rng);
    const auto path = dir / "r.json";
    dataio::write_result(doc, path);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();

    const auto pos = text.find("\"schema_version\"");
    ASSERT_NE(pos, std::string::npos);
    const auto end = text.find('\n', pos);
    std::string missing = text;
    missing.erase(pos, end - pos + 1);
    std::ofstream(path) << missing;
    EXPECT_THROW(dataio::read_result(path), dataio::SchemaVersionError);

    std::string bumped = text;
    bumped.replace(pos, end - pos, "\"schema_version\": 2,");
    std::ofstream(path) << bumped;
    EXPECT_THROW(dataio::read_result(path), dataio::SchemaVersionError);
}

TEST(Result, HistoryCsvHasOneLinePerIteration) {
    fixtures::TempDir dir;
    vls::RunRecord record;
    for (int t = 0; t < 7; ++t) {
        vls::IterationRecord it;
        it.t = t;
        it.k = t % 2;
        it.sample_size = 10 + static_cast<std::size_t>(t);
        it.objective = 100.0 - t;
        it.improved = t % 3 == 0;
        record.iterations.push_back(it);
    }
    const auto rows = dataio::history_rows(record);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[3].phase, "data");
    EXPECT_EQ(rows[3].sample_size, 13u);
    dataio::write_history_csv(rows, dir / "h.csv");
    std::ifstream in(dir / "h.csv");
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,phase,k,sample_size,objective,improved,elapsed_ms");
    int count = 0;
    while (std::getline(in, line)) ++count;
    EXPECT_EQ(count, 7);
}

TEST(Result, LabelsRoundTrip) {
    fixtures::TempDir dir;
    const std::vector<int> labels{0, 2, 1, 1, 0};
    dataio::write_labels(labels, dir / "x.labels");
    EXPECT_EQ(dataio::read_labels(dir / "x.labels"), labels);
    EXPECT_EQ(dataio::labels_sidecar("/a/b/run.json"), std::filesystem::path("/a/b/run.labels"));
    EXPECT_EQ(dataio::history_sidecar("/a/b/run.json"), std::filesystem::path("/a/b/run.history.csv"));
}

} // namespace
