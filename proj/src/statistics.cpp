#include "clusterr/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "clusterr/errors.hpp"
#include "clusterr/null_dist.hpp"

namespace clusterr {

IndividualStats individual_stats(const CenteredMatrix& x, const Partition& part,
                                 const NoiseEstimate& noise) {
    if (part.assignment.size() != x.n)
        throw config_error("partition covers " + std::to_string(part.assignment.size()) +
                           " subjects, data has " + std::to_string(x.n));
    IndividualStats stats;
    stats.k = part.k;
    stats.partition = part;
    stats.delta.resize(x.n);
    const double p = static_cast<double>(x.p);
    const double inv_sigma2 = 1.0 / noise.sigma2;
    const double scale = 1.0 / (std::sqrt(p) * noise.kappa);
    for (std::size_t i = 0; i < x.n; ++i) {
        const double* row = x.row(i);
        const double* ctr = part.centers.data() + part.assignment[i] * x.p;
        double rss = 0.0;
        for (std::size_t j = 0; j < x.p; ++j) {
            const double e = row[j] - ctr[j];
            rss += e * e;
        }
        stats.delta[i] = (rss * inv_sigma2 - p) * scale;
    }
    return stats;
}

double max_statistic(const IndividualStats& stats) {
    if (stats.delta.empty()) throw config_error("no individual statistics");
    return *std::max_element(stats.delta.begin(), stats.delta.end());
}

BlockLayout block_layout(const Partition& part, std::size_t block_len) {
    const std::size_t n = part.assignment.size();
    if (block_len < 1 || block_len > n)
        throw config_error("block length must lie in [1, n]");

    // clusterwise ordering: ascending indices within each cluster, clusters
    // concatenated in id order
    std::vector<std::vector<std::size_t>> members(part.k);
    for (std::size_t i = 0; i < n; ++i) members[part.assignment[i]].push_back(i);

    BlockLayout layout;
    layout.block_len = block_len;
    std::vector<std::size_t> current;
    current.reserve(block_len);
    for (const auto& cluster : members) {
        for (std::size_t i : cluster) {
            current.push_back(i);
            if (current.size() == block_len) {
                layout.blocks.push_back(std::move(current));
                current.clear();
                current.reserve(block_len);
            }
        }
    }
    if (!current.empty()) layout.blocks.push_back(std::move(current));
    return layout;
}

double blocked_statistic(const IndividualStats& stats, const BlockLayout& layout) {
    if (layout.blocks.empty()) throw config_error("empty block layout");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(layout.block_len));
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& block : layout.blocks) {
        double sum = 0.0;
        for (std::size_t i : block) sum += stats.delta[i];
        best = std::max(best, sum * inv_sqrt_n);
    }
    return best;
}

double fdr_statistic(const IndividualStats& stats, std::span<const double> thresholds) {
    const std::size_t n = stats.delta.size();
    if (thresholds.size() != n)
        throw config_error("need one threshold per subject");
    std::vector<double> ordered = stats.delta;
    std::sort(ordered.begin(), ordered.end(), std::greater<>());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        best = std::max(best, ordered[i] / thresholds[i]);
    return best;
}

double fdr_statistic(const IndividualStats& stats, double alpha) {
    const std::size_t p = stats.partition.centers.size() / stats.partition.k;
    const auto thresholds = fdr_thresholds(p, stats.delta.size(), alpha);
    return fdr_statistic(stats, thresholds);
}

}  // namespace clusterr
