#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clusterr/data_matrix.hpp"
#include "clusterr/kmeans.hpp"
#include "clusterr/noise.hpp"

namespace clusterr {

/// Per-subject scaled residual statistics
///   delta_i = (1/sqrt(p)) * sum_j [ (eps_ij/sigma)^2 - 1 ] / kappa
/// under a K-cluster partition.
struct IndividualStats {
    std::size_t k = 0;
    std::vector<double> delta;
    Partition partition;
};

IndividualStats individual_stats(const CenteredMatrix& x, const Partition& part,
                                 const NoiseEstimate& noise);

/// max_i delta_i
double max_statistic(const IndividualStats& stats);

/// Clusterwise-ordered indices chopped into blocks of length block_len
/// (the last block holds the remainder). Within each cluster, indices are
/// ascending; clusters are concatenated in cluster-id order.
struct BlockLayout {
    std::size_t block_len = 1;
    std::vector<std::vector<std::size_t>> blocks;
};

BlockLayout block_layout(const Partition& part, std::size_t block_len);

/// max over blocks of (1/sqrt(N)) * sum of delta in the block, with N the
/// nominal block length (also for a short final block). With block_len = 1
/// this equals max_statistic exactly.
double blocked_statistic(const IndividualStats& stats, const BlockLayout& layout);

/// max_i delta_(i) / q_chi(i*alpha/n) over the descending order statistics;
/// the null is rejected when the value exceeds 1. thresholds must be
/// fdr_thresholds(p, n, alpha).
double fdr_statistic(const IndividualStats& stats, std::span<const double> thresholds);
double fdr_statistic(const IndividualStats& stats, double alpha);

}  // namespace clusterr
