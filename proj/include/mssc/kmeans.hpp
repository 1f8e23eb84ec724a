#pragma once

#include <vector>

#include "mssc/centroids.hpp"
#include "mssc/matrix.hpp"
#include "vls/rng.hpp"

namespace mssc {

/// f(C, X): sum over points of the squared distance to the nearest centroid.
/// Zero for empty X. Throws DegenerateCentroidError if any centroid is flagged.
double mssc_objective(const CentroidSet& centroids, MatrixView points);

/// Nearest-centroid labels, lowest index on ties.
LabelAssignment assign_labels(const CentroidSet& centroids, MatrixView points);

/// Sum of squared distances of points to the mean of their label group.
/// Groups with no points contribute nothing.
double partition_objective(MatrixView points, const LabelAssignment& labels, std::size_t p);

struct KMeansOptions {
    /// Stop when (f_prev - f) / f_prev < tolerance.
    double tolerance = 1e-6;
    int max_iterations = 300;
    /// Keep the objective of every assignment pass in KMeansResult::trace.
    bool record_trace = false;
};

struct KMeansResult {
    /// Clusters empty in the final assignment keep their last position and
    /// are flagged degenerate.
    CentroidSet centroids;
    LabelAssignment labels;
    /// Objective of the returned centroids on X (all rows, flags ignored).
    double objective = 0.0;
    int iterations = 0;
    std::vector<double> trace;
};

/// Lloyd's algorithm from `init`. Throws std::invalid_argument on empty X and
/// DegenerateCentroidError when `init` has flagged centroids.
KMeansResult kmeans(MatrixView points, const CentroidSet& init, const KMeansOptions& options = {});

/// One assign-then-recenter pass; empty clusters keep their centroid. The
/// neighborhood step used by the generic best-improvement search.
CentroidSet lloyd_step(MatrixView points, const CentroidSet& centroids);

struct SeedingReport {
    std::size_t seeded = 0;
    /// Some draw had no D^2 mass left and fell back to uniform with replacement.
    bool used_fallback = false;
};

/// Fills every degenerate centroid by D^2 sampling from X, weighting by the
/// squared distance to the nearest non-degenerate (or already filled)
/// centroid. With no live centroid the first draw is uniform. Every filled
/// centroid is an exact copy of a row of X.
SeedingReport reseed_degenerate(CentroidSet& centroids, MatrixView points, vls::Rng& rng);

/// K-means++ seeding of p fresh centroids.
CentroidSet kmeanspp_init(MatrixView points, std::size_t p, vls::Rng& rng,
                          SeedingReport* report = nullptr);

} // namespace mssc
