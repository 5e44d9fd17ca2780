#include "clusterr/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clusterr/errors.hpp"

namespace clusterr {

std::vector<std::size_t> Partition::cluster_sizes() const {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t c : assignment) ++sizes[c];
    return sizes;
}

double pair_distance(const CenteredMatrix& x, std::size_t i, std::size_t j) {
    const double* a = x.row(i);
    const double* b = x.row(j);
    double sum = 0.0;
    for (std::size_t c = 0; c < x.p; ++c) {
        const double d = a[c] - b[c];
        sum += d * d;
    }
    return sum / static_cast<double>(x.p);
}

SeedSet choose_seeds(const CenteredMatrix& x, std::size_t k) {
    const std::size_t n = x.n;
    if (k < 1) throw config_error("cluster count must be >= 1");
    if (k > n) throw config_error("cluster count " + std::to_string(k) +
                                  " exceeds subject count " + std::to_string(n));

    SeedSet seeds;
    seeds.indices.reserve(k);
    seeds.indices.push_back(0);
    if (k == 1) return seeds;

    // Incrementally maintained nearest-seed assignment of the starting
    // clusters; dist[i] is rho to the nearest seed, cluster[i] its id.
    std::vector<double> dist(n);
    std::vector<std::size_t> cluster(n, 0);
    std::vector<char> is_seed(n, 0);
    is_seed[0] = 1;
    for (std::size_t i = 0; i < n; ++i) dist[i] = pair_distance(x, 0, i);

    while (seeds.indices.size() < k) {
        const std::size_t n_clusters = seeds.indices.size();

        // max within-cluster distance to the seed
        std::vector<double> rho_max(n_clusters, -1.0);
        for (std::size_t i = 0; i < n; ++i)
            rho_max[cluster[i]] = std::max(rho_max[cluster[i]], dist[i]);

        // clusters ordered by rho_max descending, id ascending on ties;
        // pick the first one that still has a non-seed member so the new
        // seed index is always fresh (duplicate rows tie at distance 0)
        std::vector<std::size_t> order(n_clusters);
        for (std::size_t c = 0; c < n_clusters; ++c) order[c] = c;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (rho_max[a] != rho_max[b]) return rho_max[a] > rho_max[b];
            return a < b;
        });

        std::size_t next = n;
        for (std::size_t c : order) {
            double best = -1.0;
            std::size_t best_i = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (cluster[i] != c || is_seed[i]) continue;
                if (dist[i] > best) {
                    best = dist[i];
                    best_i = i;
                }
            }
            if (best_i != n) {
                next = best_i;
                break;
            }
        }
        if (next == n) throw config_error("cannot pick distinct seeds");  // unreachable for k <= n

        const std::size_t new_cluster = seeds.indices.size();
        seeds.indices.push_back(next);
        is_seed[next] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = pair_distance(x, next, i);
            if (d < dist[i]) {
                dist[i] = d;
                cluster[i] = new_cluster;
            }
        }
        dist[next] = 0.0;
        cluster[next] = new_cluster;
    }
    return seeds;
}

namespace {

void compute_centers(const CenteredMatrix& x, const std::vector<std::size_t>& assignment,
                     std::size_t k, std::vector<double>& centers) {
    const std::size_t p = x.p;
    centers.assign(k * p, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < x.n; ++i) {
        const std::size_t c = assignment[i];
        ++counts[c];
        const double* row = x.row(i);
        double* ctr = centers.data() + c * p;
        for (std::size_t j = 0; j < p; ++j) ctr[j] += row[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
        double* ctr = centers.data() + c * p;
        const double inv = 1.0 / static_cast<double>(counts[c]);
        for (std::size_t j = 0; j < p; ++j) ctr[j] *= inv;
    }
}

double row_center_distance(const CenteredMatrix& x, std::size_t i, const double* ctr) {
    const double* row = x.row(i);
    double sum = 0.0;
    for (std::size_t j = 0; j < x.p; ++j) {
        const double d = row[j] - ctr[j];
        sum += d * d;
    }
    return sum / static_cast<double>(x.p);
}

// Nearest-center pass; dist_out[i] receives the distance to the chosen center.
void assign_nearest(const CenteredMatrix& x, const std::vector<double>& centers, std::size_t k,
                    std::vector<std::size_t>& assignment, std::vector<double>& dist_out) {
    const std::size_t p = x.p;
    for (std::size_t i = 0; i < x.n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const double d = row_center_distance(x, i, centers.data() + c * p);
            if (d < best) {
                best = d;
                best_c = c;
            }
        }
        assignment[i] = best_c;
        dist_out[i] = best;
    }
}

// Move the farthest point of an oversized cluster into each empty cluster.
void fix_empty_clusters(std::size_t k, std::vector<std::size_t>& assignment,
                        const std::vector<double>& dist) {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t c : assignment) ++sizes[c];
    for (std::size_t c = 0; c < k; ++c) {
        if (sizes[c] > 0) continue;
        double best = -1.0;
        std::size_t best_i = assignment.size();
        for (std::size_t i = 0; i < assignment.size(); ++i) {
            if (sizes[assignment[i]] < 2) continue;
            if (dist[i] > best) {
                best = dist[i];
                best_i = i;
            }
        }
        if (best_i == assignment.size()) throw config_error("cannot repopulate empty cluster");
        --sizes[assignment[best_i]];
        assignment[best_i] = c;
        sizes[c] = 1;
    }
}

}  // namespace

Partition lloyd(const CenteredMatrix& x, const SeedSet& seeds, std::size_t max_iter) {
    const std::size_t n = x.n;
    const std::size_t k = seeds.indices.size();
    if (k < 1 || k > n) throw config_error("seed count must lie in [1, n]");
    if (max_iter < 1) throw config_error("max_iter must be >= 1");
    for (std::size_t s : seeds.indices)
        if (s >= n) throw config_error("seed index out of range");

    Partition part;
    part.k = k;
    part.assignment.resize(n);
    std::vector<double> dist(n);

    // starting clusters: nearest seed, seeds pinned to their own cluster
    {
        std::vector<double> seed_rows(k * x.p);
        for (std::size_t c = 0; c < k; ++c)
            std::copy(x.row(seeds.indices[c]), x.row(seeds.indices[c]) + x.p,
                      seed_rows.begin() + c * x.p);
        assign_nearest(x, seed_rows, k, part.assignment, dist);
        for (std::size_t c = 0; c < k; ++c) {
            part.assignment[seeds.indices[c]] = c;
            dist[seeds.indices[c]] = 0.0;
        }
        fix_empty_clusters(k, part.assignment, dist);
    }

    std::vector<std::size_t> next(n);
    std::size_t iter = 0;
    bool converged = false;
    while (iter < max_iter) {
        ++iter;
        compute_centers(x, part.assignment, k, part.centers);
        assign_nearest(x, part.centers, k, next, dist);
        fix_empty_clusters(k, next, dist);
        if (next == part.assignment) {
            converged = true;
            break;
        }
        part.assignment.swap(next);
    }

    part.iterations = iter;
    part.converged = converged;
    compute_centers(x, part.assignment, k, part.centers);
    part.within_ss = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        part.within_ss += row_center_distance(x, i, part.centers.data() + part.assignment[i] * x.p);
    return part;
}

Partition cluster(const CenteredMatrix& x, std::size_t k, std::size_t max_iter) {
    return lloyd(x, choose_seeds(x, k), max_iter);
}

}  // namespace clusterr
