#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mssc/kernels.hpp"
#include "mssc/kmeans.hpp"
#include "mssc/oracle.hpp"
#include "mssc/sample.hpp"
#include "support/fixtures.hpp"

namespace {

using fixtures::centroids;
using fixtures::rows;

bool is_row_of(std::span<const double> c, mssc::MatrixView X) {
    for (std::size_t i = 0; i < X.rows; ++i)
        if (std::ranges::equal(c, X.row(i))) return true;
    return false;
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TEST(Objective, WorkedExamples) {
    const auto X = rows(2, {0, 0, 0, 2});
    EXPECT_EQ(mssc::mssc_objective(centroids(2, {0, 0, 0, 2}), X.view()), 0.0);
    EXPECT_EQ(mssc::mssc_objective(centroids(2, {0, 1}), X.view()), 2.0);
    EXPECT_EQ(mssc::mssc_objective(centroids(2, {0, 1, 10, 1}), fixtures::four_points().view()), 4.0);
    EXPECT_EQ(mssc::mssc_objective(centroids(2, {0, 1}), rows(2, {}).view()), 0.0);
}

TEST(Objective, DegenerateCentroidThrows) {
    auto c = centroids(2, {0, 1, 5, 5});
    c.mark_degenerate(1);
    EXPECT_THROW(mssc::mssc_objective(c, fixtures::four_points().view()), mssc::DegenerateCentroidError);
    EXPECT_THROW(mssc::assign_labels(c, fixtures::four_points().view()), mssc::DegenerateCentroidError);
}

TEST(Assign, TiesGoToLowestIndex) {
    const auto X = rows(2, {0, 0, 5, 5});
    const auto labels = mssc::assign_labels(centroids(2, {1, 0, -1, 0}), X.view());
    EXPECT_EQ(labels.labels[0], 0);
    const auto two = mssc::assign_labels(centroids(2, {0, 0, 5, 5}), X.view());
    EXPECT_EQ(two.labels, (std::vector<int>{0, 1}));
}

TEST(Assign, SumMatchesObjective) {
    auto rng = vls::make_stream(1, 0, vls::Stream::init);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = static_cast<std::size_t>(vls::uniform_int(rng, 1, 300));
        const auto n = static_cast<std::size_t>(vls::uniform_int(rng, 1, 5));
        const auto p = static_cast<std::size_t>(vls::uniform_int(rng, 1, 6));
        const auto X = fixtures::random_points(rng, s, n);
        const auto C = mssc::CentroidSet::from_matrix(fixtures::random_points(rng, p, n));
        const auto labels = mssc::assign_labels(C, X.view());
        double sum = 0.0;
        for (std::size_t i = 0; i < s; ++i)
            sum += mssc::squared_distance(X.row(i), C.row(static_cast<std::size_t>(labels.labels[i])));
        EXPECT_LE(relative(sum, mssc::mssc_objective(C, X.view())), 1e-12);
    }
}

TEST(KMeans, TraceIsNonIncreasing) {
    auto rng = vls::make_stream(2, 0, vls::Stream::init);
    mssc::KMeansOptions opts;
    opts.record_trace = true;
    opts.tolerance = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = static_cast<std::size_t>(vls::uniform_int(rng, 4, 120));
        const auto X = fixtures::random_points(rng, s, 2);
        const auto p = static_cast<std::size_t>(vls::uniform_int(rng, 1, 4));
        const auto res = mssc::kmeans(X.view(), mssc::kmeanspp_init(X.view(), p, rng), opts);
        for (std::size_t i = 1; i < res.trace.size(); ++i)
            ASSERT_LE(res.trace[i], res.trace[i - 1] * (1 + 1e-12));
        EXPECT_EQ(res.objective, res.trace.back());
    }
}

TEST(KMeans, OptimalCentroidsAreAFixedPoint) {
    const auto X = fixtures::four_points();
    const auto init = centroids(2, {0, 1, 10, 1});
    const auto res = mssc::kmeans(X.view(), init);
    EXPECT_EQ(res.centroids, init);
    EXPECT_EQ(res.objective, 4.0);
    EXPECT_EQ(res.iterations, 1);
}

TEST(KMeans, StallsInTrapFromBadStart) {
    const auto res = mssc::kmeans(fixtures::four_points().view(), centroids(2, {0, 0, 0, 2}));
    EXPECT_EQ(res.centroids, centroids(2, {5, 0, 5, 2}));
    EXPECT_DOUBLE_EQ(res.objective, 100.0);
}

TEST(KMeans, CentroidsAreClusterMeans) {
    auto rng = vls::make_stream(3, 0, vls::Stream::init);
    for (int trial = 0; trial < 50; ++trial) {
        const auto X = fixtures::random_points(rng, 80, 3);
        const auto res = mssc::kmeans(X.view(), mssc::kmeanspp_init(X.view(), 4, rng));
        for (std::size_t k = 0; k < 4; ++k) {
            if (res.centroids.is_degenerate(k)) continue;
            std::vector<double> mean(3, 0.0);
            std::size_t count = 0;
            for (std::size_t i = 0; i < 80; ++i) {
                if (res.labels.labels[i] != static_cast<int>(k)) continue;
                for (std::size_t j = 0; j < 3; ++j) mean[j] += X(i, j);
                ++count;
            }
            // Labels come from the last assignment, centroids from the last
            // recenter; they match once Lloyd has converged.
            if (count == 0) continue;
            for (std::size_t j = 0; j < 3; ++j) {
                mean[j] /= static_cast<double>(count);
                if (res.iterations < 300) {
                    EXPECT_LE(std::abs(res.centroids.row(k)[j] - mean[j]), 1e-9 * std::max(1.0, std::abs(mean[j])));
                }
            }
        }
    }
}

TEST(KMeans, EmptyClusterIsFlagged) {
    const auto res = mssc::kmeans(fixtures::four_points().view(), centroids(2, {0, 1, 10, 1, 100, 100}));
    EXPECT_FALSE(res.centroids.is_degenerate(0));
    EXPECT_FALSE(res.centroids.is_degenerate(1));
    EXPECT_TRUE(res.centroids.is_degenerate(2));
    EXPECT_EQ(res.objective, 4.0);
}

TEST(KMeans, RejectsBadInput) {
    auto c = centroids(2, {0, 1});
    EXPECT_THROW(mssc::kmeans(rows(2, {}).view(), c), std::invalid_argument);
    EXPECT_THROW(mssc::kmeans(rows(3, {0, 0, 0}).view(), c), std::invalid_argument);
    c.mark_degenerate(0);
    EXPECT_THROW(mssc::kmeans(fixtures::four_points().view(), c), mssc::DegenerateCentroidError);
}

TEST(PartitionObjective, MatchesCentroidObjectiveAtOptimum) {
    const auto X = fixtures::four_points();
    EXPECT_EQ(mssc::partition_objective(X.view(), {{0, 0, 1, 1}}, 2), 4.0);
    EXPECT_EQ(mssc::partition_objective(X.view(), {{0, 1, 0, 1}}, 2), 100.0);
    EXPECT_EQ(mssc::partition_objective(X.view(), {{0, 0, 0, 0}}, 3), 104.0);
}

TEST(Oracle, FourPoints) {
    const auto res = mssc::brute_force_mssc(fixtures::four_points().view(), 2);
    EXPECT_DOUBLE_EQ(res.value, 4.0);
    EXPECT_EQ(res.labels.labels[0], res.labels.labels[1]);
    EXPECT_EQ(res.labels.labels[2], res.labels.labels[3]);
    EXPECT_NE(res.labels.labels[0], res.labels.labels[2]);
}

TEST(Oracle, ClosedFormCases) {
    auto rng = vls::make_stream(4, 0, vls::Stream::init);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = static_cast<std::size_t>(vls::uniform_int(rng, 1, 3));
        const auto X = fixtures::random_points(rng, s, 2);
        EXPECT_EQ(mssc::brute_force_mssc(X.view(), s).value, 0.0);

        const auto Y = fixtures::random_points(rng, 9, 2);
        double cx = 0, cy = 0;
        for (std::size_t i = 0; i < 9; ++i) {
            cx += Y(i, 0);
            cy += Y(i, 1);
        }
        cx /= 9;
        cy /= 9;
        double expected = 0.0;
        for (std::size_t i = 0; i < 9; ++i)
            expected += (Y(i, 0) - cx) * (Y(i, 0) - cx) + (Y(i, 1) - cy) * (Y(i, 1) - cy);
        EXPECT_LE(relative(mssc::brute_force_mssc(Y.view(), 1).value, expected), 1e-12);
    }
}

TEST(Oracle, EnumerationBounds) {
    auto rng = vls::make_stream(5, 0, vls::Stream::init);
    EXPECT_THROW(mssc::brute_force_mssc(fixtures::random_points(rng, 13, 2).view(), 2), std::invalid_argument);
    EXPECT_THROW(mssc::brute_force_mssc(fixtures::random_points(rng, 5, 2).view(), 4), std::invalid_argument);
    EXPECT_THROW(mssc::brute_force_mssc(fixtures::random_points(rng, 5, 2).view(), 0), std::invalid_argument);
    EXPECT_NO_THROW(mssc::brute_force_mssc(fixtures::random_points(rng, 12, 2).view(), 3));
}

TEST(Oracle, TranslationInvariantAndDominatesKMeans) {
    auto rng = vls::make_stream(6, 0, vls::Stream::init);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s = static_cast<std::size_t>(vls::uniform_int(rng, 3, 9));
        const auto p = static_cast<std::size_t>(vls::uniform_int(rng, 1, 3));
        const auto X = fixtures::grid_points(rng, s, 2);
        const double opt = mssc::brute_force_mssc(X.view(), p).value;

        auto shifted = X;
        for (std::size_t i = 0; i < s; ++i) {
            shifted(i, 0) += 3.25;
            shifted(i, 1) -= 1.5;
        }
        EXPECT_LE(std::abs(mssc::brute_force_mssc(shifted.view(), p).value - opt), 1e-9 * std::max(1.0, opt));

        for (int r = 0; r < 5; ++r) {
            const auto res = mssc::kmeans(X.view(), mssc::kmeanspp_init(X.view(), p, rng));
            EXPECT_GE(res.objective, opt - 1e-9 * std::max(1.0, opt));
        }
    }
}

TEST(KMeansPlusPlus, SinglePoint) {
    const auto X = rows(2, {3, 4});
    auto rng = vls::make_stream(7, 0, vls::Stream::init);
    const auto c = mssc::kmeanspp_init(X.view(), 1, rng);
    EXPECT_EQ(c, centroids(2, {3, 4}));
}

TEST(KMeansPlusPlus, ZeroMassPointIsNeverPicked) {
    const auto X = rows(2, {0, 0, 10, 0});
    auto rng = vls::make_stream(8, 0, vls::Stream::init);
    for (int i = 0; i < 200; ++i) {
        auto c = centroids(2, {0, 0, 0, 0});
        c.mark_degenerate(1);
        mssc::reseed_degenerate(c, X.view(), rng);
        EXPECT_EQ(c, centroids(2, {0, 0, 10, 0}));
    }
}

TEST(KMeansPlusPlus, DrawsProportionalToSquaredDistance) {
    const auto X = rows(1, {0, 1, 3});
    auto rng = vls::make_stream(9, 0, vls::Stream::init);
    int far = 0;
    constexpr int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        auto c = centroids(1, {0, 0});
        c.mark_degenerate(1);
        mssc::reseed_degenerate(c, X.view(), rng);
        if (c.row(1)[0] == 3.0) ++far;
        else EXPECT_EQ(c.row(1)[0], 1.0);
    }
    EXPECT_NEAR(static_cast<double>(far) / trials, 0.9, 0.02);
}

TEST(KMeansPlusPlus, SeedsAreDataRowsAndLiveCentroidsStay) {
    auto rng = vls::make_stream(10, 0, vls::Stream::init);
    for (int trial = 0; trial < 100; ++trial) {
        const auto X = fixtures::random_points(rng, 30, 2);
        mssc::SeedingReport report;
        const auto c = mssc::kmeanspp_init(X.view(), 5, rng, &report);
        EXPECT_EQ(report.seeded, 5u);
        EXPECT_FALSE(c.any_degenerate());
        for (std::size_t j = 0; j < 5; ++j) EXPECT_TRUE(is_row_of(c.row(j), X.view()));

        auto partial = c;
        partial.mark_degenerate(1);
        partial.mark_degenerate(3);
        const auto before0 = std::vector<double>(c.row(0).begin(), c.row(0).end());
        mssc::reseed_degenerate(partial, X.view(), rng);
        EXPECT_TRUE(std::ranges::equal(partial.row(0), before0));
        EXPECT_TRUE(is_row_of(partial.row(1), X.view()));
        EXPECT_TRUE(is_row_of(partial.row(3), X.view()));
    }
}

TEST(KMeansPlusPlus, FallsBackWhenNoMassLeft) {
    const auto X = rows(2, {1, 1, 1, 1, 1, 1});
    auto rng = vls::make_stream(11, 0, vls::Stream::init);
    mssc::SeedingReport report;
    const auto c = mssc::kmeanspp_init(X.view(), 3, rng, &report);
    EXPECT_TRUE(report.used_fallback);
    EXPECT_FALSE(c.any_degenerate());
    EXPECT_EQ(c, centroids(2, {1, 1, 1, 1, 1, 1}));
}

TEST(Kernels, SerialAndParallelAgree) {
    auto rng = vls::make_stream(12, 0, vls::Stream::init);
    for (const std::size_t s : {1u, 7u, 1024u, 1025u, 5000u, 40000u}) {
        const auto X = fixtures::random_points(rng, s, 3);
        const auto C = fixtures::random_points(rng, 6, 3);
        std::vector<int> a(s), b(s);
        const double fa = mssc::serial::assign(X.view(), C.view(), a);
        const double fb = mssc::omp::assign(X.view(), C.view(), b);
        EXPECT_EQ(a, b);
        EXPECT_LE(relative(fb, fa), 1e-12);
        EXPECT_LE(relative(mssc::omp::objective(X.view(), C.view()), mssc::serial::objective(X.view(), C.view())), 1e-12);

        std::vector<double> sa(18), sb(18);
        std::vector<std::size_t> ca(6), cb(6);
        mssc::serial::accumulate(X.view(), a, sa, ca);
        mssc::omp::accumulate(X.view(), a, sb, cb);
        EXPECT_EQ(ca, cb);
        for (std::size_t v = 0; v < 18; ++v) EXPECT_LE(std::abs(sa[v] - sb[v]), 1e-9 * std::max(1.0, std::abs(sa[v])));

        std::vector<double> da(s, 50.0), db(s, 50.0);
        mssc::serial::update_min_distance(X.view(), C.row(2), da);
        mssc::omp::update_min_distance(X.view(), C.row(2), db);
        EXPECT_EQ(da, db);
    }
}

TEST(Kernels, BlockPartitionDependsOnRowsOnly) {
    EXPECT_EQ(mssc::omp::block_count(0), 1u);
    EXPECT_EQ(mssc::omp::block_count(1024), 1u);
    EXPECT_EQ(mssc::omp::block_count(1025), 2u);
    EXPECT_EQ(mssc::omp::block_count(10'000'000), 256u);
}

TEST(Sampling, SortedDistinctInRange) {
    auto rng = vls::make_stream(13, 0, vls::Stream::data_shake);
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = static_cast<std::size_t>(vls::uniform_int(rng, 1, 300));
        const auto s = static_cast<std::size_t>(vls::uniform_int(rng, 0, static_cast<std::int64_t>(m)));
        const auto idx = mssc::draw_indices(m, s, rng);
        ASSERT_EQ(idx.size(), s);
        for (std::size_t i = 0; i < s; ++i) {
            ASSERT_LT(idx[i], m);
            if (i) {
                ASSERT_LT(idx[i - 1], idx[i]);
            }
        }
    }
    EXPECT_THROW(mssc::draw_indices(5, 6, rng), std::invalid_argument);
    std::vector<std::size_t> all(9);
    std::iota(all.begin(), all.end(), std::size_t{0});
    EXPECT_EQ(mssc::draw_indices(9, 9, rng), all);
}

TEST(Sampling, InclusionIsUniform) {
    auto rng = vls::make_stream(14, 0, vls::Stream::data_shake);
    std::vector<std::size_t> counts(20, 0);
    for (int i = 0; i < 20000; ++i)
        for (const auto j : mssc::draw_indices(20, 5, rng)) ++counts[j];
    // df = 19, 0.999 quantile.
    EXPECT_LT(fixtures::chi_square_uniform(counts), 43.82);
}

TEST(Sampling, ForeignReferenceRejected) {
    const mssc::Dataset a(fixtures::four_points());
    const mssc::Dataset b(fixtures::four_points());
    EXPECT_NE(a.id(), b.id());
    EXPECT_THROW(mssc::gather(a, mssc::prefix_sample(b, 2)), std::invalid_argument);
    EXPECT_THROW(mssc::check_sample(a, mssc::SampleRef{a.id(), {2, 1}}), std::invalid_argument);
    EXPECT_THROW(mssc::check_sample(a, mssc::SampleRef{a.id(), {4}}), std::invalid_argument);
    EXPECT_EQ(mssc::gather(a, mssc::SampleRef{a.id(), {1, 3}}), rows(2, {0, 2, 10, 2}));
}

} // namespace
