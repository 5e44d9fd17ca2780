#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterr/data_matrix.hpp"
#include "clusterr/kmeans.hpp"
#include "clusterr/noise.hpp"

namespace clusterr {

enum class StatisticKind { max, blocked, fdr };

std::string to_string(StatisticKind s);
StatisticKind statistic_kind_from_string(const std::string& s);

struct EstimatorConfig {
    double alpha = 0.05;
    StatisticKind statistic = StatisticKind::max;
    std::size_t block_size = 0;  // 0 = use p (rule of thumb for the blocked statistic)
    NoiseMethod variance_method = NoiseMethod::lip;
    std::optional<SegmentBoundaries> segments;  // required for pc
    std::size_t k_max = 20;                     // cluster bound for the rss estimator
    std::size_t k_cap = 0;                      // 0 = min(n, 50)
    std::size_t max_iter = 100;
};

struct TestRecord {
    std::size_t k = 0;
    double statistic = 0.0;
    double pvalue = 0.0;  // the ratio statistic itself in fdr mode
    bool rejected = false;
    std::vector<std::size_t> cluster_sizes;
    double within_ss = 0.0;
    bool converged = true;
};

struct TestTrace {
    std::vector<TestRecord> per_k;           // K = 1 .. last tested
    std::optional<std::size_t> accepted;     // absent when the cap was reached
};

struct FitResult {
    std::optional<std::size_t> k_hat;
    std::optional<Partition> partition;      // at k_hat
    NoiseEstimate noise;
    TestTrace trace;
    EstimatorConfig config;                  // resolved configuration echo
    std::size_t n = 0;
    std::size_t p = 0;
    bool pvalue_is_ratio = false;            // true in fdr mode

    bool accepted() const { return k_hat.has_value(); }
};

/// Sequential procedure: estimate the noise once, then for K = 1, 2, ...
/// cluster, compute the configured statistic and stop at the first K whose
/// test does not reject. Reaching the cap yields an explicit no-acceptance
/// result carrying the full trace.
FitResult fit(const DataMatrix& data, const EstimatorConfig& cfg);

/// Plot-ready (K, p-value) table extracted from the trace.
std::vector<std::pair<std::size_t, double>> pvalue_curve(const FitResult& result);

}  // namespace clusterr
