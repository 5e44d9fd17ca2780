#include "clusterr/estimator.hpp"

#include <algorithm>

#include "clusterr/errors.hpp"
#include "clusterr/null_dist.hpp"
#include "clusterr/statistics.hpp"

namespace clusterr {

std::string to_string(StatisticKind s) {
    switch (s) {
        case StatisticKind::max: return "max";
        case StatisticKind::blocked: return "blocked";
        case StatisticKind::fdr: return "fdr";
    }
    return "max";
}

StatisticKind statistic_kind_from_string(const std::string& s) {
    if (s == "max") return StatisticKind::max;
    if (s == "blocked") return StatisticKind::blocked;
    if (s == "fdr") return StatisticKind::fdr;
    throw config_error("unknown statistic '" + s + "' (expected max, blocked or fdr)");
}

namespace {

EstimatorConfig resolve(const EstimatorConfig& cfg, std::size_t n, std::size_t p) {
    EstimatorConfig r = cfg;
    if (!(r.alpha > 0.0 && r.alpha < 1.0)) throw config_error("alpha must lie in (0,1)");
    if (r.max_iter < 1) throw config_error("max_iter must be >= 1");
    if (r.k_cap == 0) r.k_cap = std::min<std::size_t>(n, 50);
    r.k_cap = std::min(r.k_cap, n);
    if (r.block_size == 0) r.block_size = p;
    if (r.statistic == StatisticKind::blocked && r.block_size > n)
        throw config_error("block size exceeds subject count");
    if (r.variance_method == NoiseMethod::pc && !r.segments)
        throw config_error("the pc variance method requires segment boundaries");
    if (r.variance_method == NoiseMethod::rss && (r.k_max < 1 || r.k_max > n))
        throw config_error("k_max must lie in [1, n]");
    return r;
}

NoiseEstimate estimate_noise(const DataMatrix& data, const EstimatorConfig& cfg) {
    switch (cfg.variance_method) {
        case NoiseMethod::lip: return estimate_lip(data);
        case NoiseMethod::pc: return estimate_pc(data, *cfg.segments);
        case NoiseMethod::rss: return estimate_rss(data, cfg.k_max, cfg.max_iter);
    }
    throw config_error("unknown variance method");
}

}  // namespace

FitResult fit(const DataMatrix& data, const EstimatorConfig& cfg) {
    const std::size_t n = data.rows();
    const std::size_t p = data.cols();

    FitResult result;
    result.n = n;
    result.p = p;
    result.config = resolve(cfg, n, p);
    result.pvalue_is_ratio = result.config.statistic == StatisticKind::fdr;

    const CenteredMatrix x = center_rows(data);
    // sigma^2 and kappa are estimated once, up front; every K reuses them
    result.noise = estimate_noise(data, result.config);

    std::vector<double> thresholds;
    BlockNull block_null;
    if (result.config.statistic == StatisticKind::fdr)
        thresholds = fdr_thresholds(p, n, result.config.alpha);
    if (result.config.statistic == StatisticKind::blocked)
        block_null = BlockNull::regular(p, n, result.config.block_size);

    for (std::size_t k = 1; k <= result.config.k_cap; ++k) {
        const Partition part = cluster(x, k, result.config.max_iter);
        const IndividualStats stats = individual_stats(x, part, result.noise);

        TestRecord record;
        record.k = k;
        record.cluster_sizes = part.cluster_sizes();
        record.within_ss = part.within_ss;
        record.converged = part.converged;

        switch (result.config.statistic) {
            case StatisticKind::max:
                record.statistic = max_statistic(stats);
                record.pvalue = max_pvalue(p, n, record.statistic);
                record.rejected = !(record.pvalue > result.config.alpha);
                break;
            case StatisticKind::blocked: {
                const BlockLayout layout = block_layout(part, result.config.block_size);
                record.statistic = blocked_statistic(stats, layout);
                record.pvalue = blocked_pvalue(block_null, record.statistic);
                record.rejected = !(record.pvalue > result.config.alpha);
                break;
            }
            case StatisticKind::fdr:
                record.statistic = fdr_statistic(stats, thresholds);
                record.pvalue = record.statistic;  // ratio, not a probability
                record.rejected = record.statistic > 1.0;
                break;
        }

        result.trace.per_k.push_back(record);
        if (!record.rejected) {
            result.trace.accepted = k;
            result.k_hat = k;
            result.partition = part;
            break;
        }
    }
    return result;
}

std::vector<std::pair<std::size_t, double>> pvalue_curve(const FitResult& result) {
    std::vector<std::pair<std::size_t, double>> curve;
    curve.reserve(result.trace.per_k.size());
    for (const auto& rec : result.trace.per_k) curve.emplace_back(rec.k, rec.pvalue);
    return curve;
}

}  // namespace clusterr
