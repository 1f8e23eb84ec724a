#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bigmeans/algorithms.hpp"
#include "mssc/kmeans.hpp"
#include "mssc/oracle.hpp"
#include "vls/rng.hpp"

namespace cli {
namespace {

constexpr double kRelTol = 1e-9;

bool below_optimum(double value, double optimum) { return value < optimum - kRelTol * std::abs(optimum); }

std::string describe(const std::string& what, double value, double optimum) {
    std::ostringstream s;
    s.precision(17);
    s << what << " = " << value << " below oracle " << optimum;
    return s.str();
}

/// Indices of rows that are not exact copies of an earlier row.
std::vector<std::size_t> distinct_rows(const mssc::Matrix& points) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < points.rows(); ++i) {
        const auto ri = points.row(i);
        const bool seen = std::any_of(keep.begin(), keep.end(), [&](std::size_t j) {
            return std::equal(ri.begin(), ri.end(), points.row(j).begin());
        });
        if (!seen) keep.push_back(i);
    }
    return keep;
}

/// Calls fn(combination) for every p-subset of `items`, in lexicographic order.
template <class Fn>
void for_each_combination(const std::vector<std::size_t>& items, std::size_t p, Fn&& fn) {
    if (p > items.size()) return;
    std::vector<std::size_t> idx(p);
    for (std::size_t i = 0; i < p; ++i) idx[i] = i;
    std::vector<std::size_t> combo(p);
    for (;;) {
        for (std::size_t i = 0; i < p; ++i) combo[i] = items[idx[i]];
        fn(combo);
        std::size_t i = p;
        while (i > 0 && idx[i - 1] == items.size() - p + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<TinyInstance> tiny_suite() {
    std::vector<TinyInstance> suite;
    suite.push_back({"trap", mssc::Matrix(4, 2, {0, 0, 0, 2, 10, 0, 10, 2}), 2});
    suite.push_back({"pair-p2", mssc::Matrix(2, 1, {-1.5, 4.0}), 2});
    suite.push_back({"triple-p3", mssc::Matrix(3, 2, {0, 0, 1, 5, -2, 3}), 3});
    suite.push_back({"dupes", mssc::Matrix(5, 1, {1, 1, 1, 4, 4}), 3});

    vls::Rng rng(20240611);
    for (int i = 0; suite.size() < 20; ++i) {
        const std::size_t s = 3 + static_cast<std::size_t>(i) % 6;
        const std::size_t n = 1 + static_cast<std::size_t>(i) % 2;
        const std::size_t p = i % 5 == 4 ? std::min<std::size_t>(s, 3) : 1 + static_cast<std::size_t>(i) % 3;
        mssc::Matrix points(s, n);
        for (auto& v : points.values()) v = 0.5 * static_cast<double>(vls::uniform_int(rng, 0, 9));
        suite.push_back({"rand-" + std::to_string(i), std::move(points), p});
    }
    return suite;
}

bool VerifyReport::ok() const {
    return std::all_of(instances.begin(), instances.end(),
                       [](const InstanceCheck& c) { return c.violations.empty(); });
}

VerifyReport run_verify(const std::vector<TinyInstance>& suite, const VerifyOptions& options) {
    VerifyReport report;
    for (const auto& inst : suite) {
        InstanceCheck check;
        check.name = inst.name;
        const auto X = inst.points.view();
        const auto oracle = mssc::brute_force_mssc(X, inst.clusters);
        check.oracle = oracle.value;
        if (options.corrupt_instance && *options.corrupt_instance == inst.name)
            check.oracle += 1.0 + std::abs(check.oracle);

        check.best_seeded_kmeans = std::numeric_limits<double>::infinity();
        for_each_combination(distinct_rows(inst.points), inst.clusters, [&](const std::vector<std::size_t>& rows) {
            mssc::Matrix seeds(rows.size(), inst.points.cols());
            for (std::size_t j = 0; j < rows.size(); ++j)
                std::copy_n(inst.points.row(rows[j]).begin(), inst.points.cols(), seeds.row(j).begin());
            const double f = mssc::kmeans(X, mssc::CentroidSet::from_matrix(std::move(seeds))).objective;
            check.best_seeded_kmeans = std::min(check.best_seeded_kmeans, f);
            if (below_optimum(f, check.oracle)) check.violations.push_back(describe("seeded kmeans", f, check.oracle));
        });

        // Start K-means at the optimum; unused slots duplicate a live centroid.
        auto at_optimum = oracle.centroids;
        std::size_t live = 0;
        while (at_optimum.is_degenerate(live)) ++live;
        for (std::size_t j = 0; j < at_optimum.size(); ++j)
            if (at_optimum.is_degenerate(j)) at_optimum.set(j, at_optimum.row(live));
        const double f_opt = mssc::kmeans(X, at_optimum).objective;
        if (below_optimum(f_opt, check.oracle))
            check.violations.push_back(describe("kmeans from optimum", f_opt, check.oracle));
        if (f_opt > check.oracle + kRelTol * std::abs(check.oracle)) {
            std::ostringstream s;
            s.precision(17);
            s << "kmeans from optimal centroids = " << f_opt << " above oracle " << check.oracle;
            check.violations.push_back(s.str());
        }

        bigmeans::BigMeansConfig cfg;
        cfg.clusters = inst.clusters;
        cfg.sample_size = inst.points.rows();
        cfg.iterations = options.bigmeans_iterations;
        cfg.seed = options.seed;
        check.bigmeans = bigmeans::big_means(mssc::Dataset(inst.points), cfg).objective;
        if (below_optimum(check.bigmeans, check.oracle))
            check.violations.push_back(describe("big_means", check.bigmeans, check.oracle));
        if (inst.clusters == inst.points.rows()) {
            if (check.oracle != 0.0) check.violations.push_back("p = s but oracle value is not 0");
            if (check.bigmeans > kRelTol) check.violations.push_back("p = s but big_means did not reach 0");
        }
        report.instances.push_back(std::move(check));
    }
    return report;
}

} // namespace cli
