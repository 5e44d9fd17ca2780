#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clusterr/data_matrix.hpp"

namespace clusterr {

enum class NoiseMethod { lip, pc, rss };

std::string to_string(NoiseMethod m);
NoiseMethod noise_method_from_string(const std::string& s);

/// Error variance and normalization constant. kappa = sqrt(theta4/sigma2^2 - 1)
/// with theta4 the estimated fourth moment of the errors; kappa = sqrt(2) for
/// Gaussian noise. Construction fails (degenerate_noise_error) when
/// sigma2 <= 0 or theta4 <= sigma2^2.
struct NoiseEstimate {
    double sigma2 = 0.0;
    double kappa = 0.0;
    double theta4 = 0.0;
    NoiseMethod method = NoiseMethod::lip;
};

/// Column segmentation 1 = j_0 < j_1 < ... < j_T = p+1 (1-based cutpoints).
/// Columns j_{t-1} .. j_t - 1 form segment t; differences across a cutpoint
/// are excluded from the piecewise-constant estimator.
struct SegmentBoundaries {
    std::vector<std::size_t> cutpoints;

    static SegmentBoundaries single(std::size_t p);                       // {1, p+1}
    static SegmentBoundaries equal_blocks(std::size_t p, std::size_t t);  // t segments of length p/t

    std::size_t segments() const { return cutpoints.empty() ? 0 : cutpoints.size() - 1; }
    void validate(std::size_t p) const;  // throws config_error
};

/// First-difference estimator for smooth per-row trends.
NoiseEstimate estimate_lip(const DataMatrix& data);

/// Same differences restricted to within-segment pairs; equals estimate_lip
/// when segs is the single segment {1, p+1}.
NoiseEstimate estimate_pc(const DataMatrix& data, const SegmentBoundaries& segs);

/// Split-sample residual estimator: clusters the odd columns with k_max
/// groups and measures residuals on the even columns, which keeps the
/// residuals independent of the fitted clusters.
NoiseEstimate estimate_rss(const DataMatrix& data, std::size_t k_max, std::size_t max_iter = 100);

/// (K, RSS(K)) for K in [k_min, k_max], where RSS(K) is the mean squared
/// residual per entry under the K-cluster partition.
std::vector<std::pair<std::size_t, double>> rss_curve(const CenteredMatrix& x,
                                                      std::size_t k_min,
                                                      std::size_t k_max,
                                                      std::size_t max_iter = 100);

}  // namespace clusterr
