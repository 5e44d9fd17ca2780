#pragma once

#include <cstddef>
#include <vector>

#include "clusterr/data_matrix.hpp"

namespace clusterr {

/// Ordered farthest-point seeds i_1, ..., i_K (distinct subject indices).
struct SeedSet {
    std::vector<std::size_t> indices;
};

struct Partition {
    std::size_t k = 0;
    std::vector<std::size_t> assignment;  // length n, values in [0, k)
    std::vector<double> centers;          // k x p, row-major cluster means
    double within_ss = 0.0;               // sum_i rho(i, center of i), i.e. /p scaled
    bool converged = true;
    std::size_t iterations = 0;

    const double* center(std::size_t c, std::size_t p) const { return centers.data() + c * p; }
    std::vector<std::size_t> cluster_sizes() const;
};

/// rho(i, i') = (1/p) * sum_j (x_ij - x_i'j)^2
double pair_distance(const CenteredMatrix& x, std::size_t i, std::size_t j);

/// Farthest-point seeding: i_1 = 0; each further seed is the farthest member
/// of the starting cluster with the largest within-cluster distance to its
/// seed. All ties break to the smallest index, so the result is
/// deterministic. Requires 1 <= k <= n.
SeedSet choose_seeds(const CenteredMatrix& x, std::size_t k);

/// Lloyd iterations from nearest-seed starting clusters. Stops when the
/// assignment is stable or after max_iter steps (then converged = false).
/// A cluster emptied by a reassignment pass is re-seeded with the point
/// farthest from its currently assigned center, so all k clusters stay
/// non-empty.
Partition lloyd(const CenteredMatrix& x, const SeedSet& seeds, std::size_t max_iter = 100);

/// choose_seeds + lloyd.
Partition cluster(const CenteredMatrix& x, std::size_t k, std::size_t max_iter = 100);

}  // namespace clusterr
