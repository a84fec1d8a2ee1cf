#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcshms/rng.hpp"

namespace mcshms {

using Point = std::vector<double>;

/// Result of k-means grouping in search space.
struct ClusterAssignment {
    std::vector<int> labels;           // one per point, in [0, k)
    std::vector<Point> centroids;      // k rows of dimension D
    int k = 0;
    int iterations = 0;                // Lloyd iterations performed

    std::vector<std::size_t> members(int cluster) const;
    std::vector<std::size_t> cluster_sizes() const;
};

struct KMeansOptions {
    int max_iter = 100;
    double tol = 1e-9;
};

/// k distinct indices drawn uniformly without replacement from [0, n).
std::vector<std::size_t> choose_seeds(std::size_t n, int k, RngStream& rng);

/// Nearest-centroid labels (squared Euclidean distance, ties to the lowest index).
std::vector<int> assign_nearest(std::span<const Point> points, std::span<const Point> centroids);

/// Member means for every cluster. Empty clusters are repaired first: each one
/// takes the member farthest from its centroid out of the currently largest
/// cluster, after which both centroids are recomputed.
std::vector<Point> update_centroids(std::span<const Point> points, std::vector<int>& labels, int k);

/// Single seed-assign-update pass. No reassignment after the update.
ClusterAssignment one_step_kmeans(std::span<const Point> points, int k, RngStream& rng);
ClusterAssignment one_step_kmeans_from_seeds(std::span<const Point> points, std::span<const std::size_t> seeds);

/// Lloyd iterations from random-member seeds until the assignment is stable,
/// the largest centroid shift drops below tol, or max_iter is reached.
/// If `wcss_trace` is non-null, the within-cluster sum of squares after each
/// centroid update is appended to it.
ClusterAssignment full_kmeans(std::span<const Point> points, int k, RngStream& rng, KMeansOptions options = {},
                              std::vector<double>* wcss_trace = nullptr);
ClusterAssignment full_kmeans_from_seeds(std::span<const Point> points, std::span<const std::size_t> seeds,
                                         KMeansOptions options = {}, std::vector<double>* wcss_trace = nullptr);

/// Mean objective value of each cluster's members.
std::vector<double> cluster_mean_values(const ClusterAssignment& assignment, std::span<const double> values);

double within_cluster_ss(std::span<const Point> points, const ClusterAssignment& assignment);

double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace mcshms
