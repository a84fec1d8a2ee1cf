#include "mcshms/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mcshms {

namespace {

void check_k(std::size_t n, int k) {
    if (k <= 0) throw std::invalid_argument("k-means: k must be positive, got " + std::to_string(k));
    if (static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("k-means: k = " + std::to_string(k) + " exceeds number of points " +
                                    std::to_string(n));
    }
}

void check_points(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("k-means: no points");
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw std::invalid_argument("k-means: points differ in dimension");
    }
}

Point member_mean(std::span<const Point> points, const std::vector<int>& labels, int cluster) {
    Point mean(points.front().size(), 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (labels[i] != cluster) continue;
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += points[i][j];
        ++count;
    }
    for (auto& m : mean) m /= static_cast<double>(count);
    return mean;
}

std::vector<std::size_t> sizes_of(const std::vector<int>& labels, int k) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (int label : labels) ++sizes[static_cast<std::size_t>(label)];
    return sizes;
}

double max_shift(std::span<const Point> a, std::span<const Point> b) {
    double shift = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) shift = std::max(shift, squared_distance(a[c], b[c]));
    return std::sqrt(shift);
}

}  // namespace

std::vector<std::size_t> ClusterAssignment::members(int cluster) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == cluster) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> ClusterAssignment::cluster_sizes() const { return sizes_of(labels, k); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        d += diff * diff;
    }
    return d;
}

std::vector<std::size_t> choose_seeds(std::size_t n, int k, RngStream& rng) {
    check_k(n, k);
    std::vector<std::size_t> index(n);
    std::iota(index.begin(), index.end(), std::size_t{0});
    const auto last = static_cast<std::int64_t>(n) - 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(i), last));
        std::swap(index[i], index[j]);
    }
    index.resize(static_cast<std::size_t>(k));
    return index;
}

std::vector<int> assign_nearest(std::span<const Point> points, std::span<const Point> centroids) {
    std::vector<int> labels(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        double best = squared_distance(points[i], centroids[0]);
        for (std::size_t c = 1; c < centroids.size(); ++c) {
            const double d = squared_distance(points[i], centroids[c]);
            if (d < best) {
                best = d;
                labels[i] = static_cast<int>(c);
            }
        }
    }
    return labels;
}

std::vector<Point> update_centroids(std::span<const Point> points, std::vector<int>& labels, int k) {
    auto sizes = sizes_of(labels, k);
    for (int c = 0; c < k; ++c) {
        if (sizes[static_cast<std::size_t>(c)] != 0) continue;
        const auto largest = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
        if (sizes[static_cast<std::size_t>(largest)] < 2) {
            throw std::logic_error("k-means repair: no cluster can donate a member");
        }
        const Point centre = member_mean(points, labels, largest);
        std::size_t farthest = points.size();
        double farthest_d = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (labels[i] != largest) continue;
            const double d = squared_distance(points[i], centre);
            if (d > farthest_d) {
                farthest_d = d;
                farthest = i;
            }
        }
        labels[farthest] = c;
        --sizes[static_cast<std::size_t>(largest)];
        ++sizes[static_cast<std::size_t>(c)];
    }
    std::vector<Point> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) centroids.push_back(member_mean(points, labels, c));
    return centroids;
}

ClusterAssignment one_step_kmeans(std::span<const Point> points, int k, RngStream& rng) {
    check_points(points);
    const auto seeds = choose_seeds(points.size(), k, rng);
    return one_step_kmeans_from_seeds(points, seeds);
}

ClusterAssignment one_step_kmeans_from_seeds(std::span<const Point> points, std::span<const std::size_t> seeds) {
    return full_kmeans_from_seeds(points, seeds, KMeansOptions{1, 0.0});
}

ClusterAssignment full_kmeans(std::span<const Point> points, int k, RngStream& rng, KMeansOptions options,
                              std::vector<double>* wcss_trace) {
    check_points(points);
    const auto seeds = choose_seeds(points.size(), k, rng);
    return full_kmeans_from_seeds(points, seeds, options, wcss_trace);
}

ClusterAssignment full_kmeans_from_seeds(std::span<const Point> points, std::span<const std::size_t> seeds,
                                         KMeansOptions options, std::vector<double>* wcss_trace) {
    check_points(points);
    const int k = static_cast<int>(seeds.size());
    check_k(points.size(), k);
    if (options.max_iter < 1) throw std::invalid_argument("k-means: max_iter must be at least 1");
    for (auto s : seeds) {
        if (s >= points.size()) throw std::invalid_argument("k-means: seed index out of range");
    }

    ClusterAssignment result;
    result.k = k;
    for (auto s : seeds) result.centroids.push_back(points[s]);
    result.labels = assign_nearest(points, result.centroids);

    for (int iter = 1;; ++iter) {
        auto centroids = update_centroids(points, result.labels, k);
        const double shift = max_shift(centroids, result.centroids);
        result.centroids = std::move(centroids);
        result.iterations = iter;
        if (wcss_trace != nullptr) wcss_trace->push_back(within_cluster_ss(points, result));
        if (iter >= options.max_iter || shift < options.tol) break;
        auto labels = assign_nearest(points, result.centroids);
        if (labels == result.labels) break;
        result.labels = std::move(labels);
    }
    return result;
}

std::vector<double> cluster_mean_values(const ClusterAssignment& assignment, std::span<const double> values) {
    if (values.size() != assignment.labels.size()) {
        throw std::invalid_argument("cluster_mean_values: labels and values differ in length");
    }
    std::vector<double> sums(static_cast<std::size_t>(assignment.k), 0.0);
    std::vector<std::size_t> counts(static_cast<std::size_t>(assignment.k), 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto c = static_cast<std::size_t>(assignment.labels[i]);
        sums[c] += values[i];
        ++counts[c];
    }
    for (std::size_t c = 0; c < sums.size(); ++c) {
        if (counts[c] == 0) throw std::logic_error("cluster_mean_values: empty cluster " + std::to_string(c));
        sums[c] /= static_cast<double>(counts[c]);
    }
    return sums;
}

double within_cluster_ss(std::span<const Point> points, const ClusterAssignment& assignment) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        total += squared_distance(points[i], assignment.centroids[static_cast<std::size_t>(assignment.labels[i])]);
    }
    return total;
}

}  // namespace mcshms
