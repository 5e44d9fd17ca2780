#include "clusterr/noise.hpp"

#include <cmath>
#include <limits>

#include "clusterr/errors.hpp"
#include "clusterr/kmeans.hpp"

namespace clusterr {

std::string to_string(NoiseMethod m) {
    switch (m) {
        case NoiseMethod::lip: return "lip";
        case NoiseMethod::pc: return "pc";
        case NoiseMethod::rss: return "rss";
    }
    return "lip";
}

NoiseMethod noise_method_from_string(const std::string& s) {
    if (s == "lip") return NoiseMethod::lip;
    if (s == "pc") return NoiseMethod::pc;
    if (s == "rss") return NoiseMethod::rss;
    throw config_error("unknown variance method '" + s + "' (expected lip, pc or rss)");
}

SegmentBoundaries SegmentBoundaries::single(std::size_t p) {
    return SegmentBoundaries{{1, p + 1}};
}

SegmentBoundaries SegmentBoundaries::equal_blocks(std::size_t p, std::size_t t) {
    if (t < 1 || p % t != 0)
        throw config_error("p = " + std::to_string(p) + " is not divisible into " +
                           std::to_string(t) + " equal segments");
    SegmentBoundaries segs;
    const std::size_t len = p / t;
    for (std::size_t c = 1; c <= p + 1; c += len) segs.cutpoints.push_back(c);
    return segs;
}

void SegmentBoundaries::validate(std::size_t p) const {
    if (cutpoints.size() < 2) throw config_error("segment cutpoints need at least {1, p+1}");
    if (cutpoints.front() != 1)
        throw config_error("first segment cutpoint must be 1");
    if (cutpoints.back() != p + 1)
        throw config_error("last segment cutpoint must be p+1 = " + std::to_string(p + 1));
    for (std::size_t t = 1; t < cutpoints.size(); ++t)
        if (cutpoints[t] <= cutpoints[t - 1])
            throw config_error("segment cutpoints must be strictly increasing");
}

namespace {

NoiseEstimate make_estimate(double sigma2, double theta4, NoiseMethod method) {
    NoiseEstimate est;
    est.sigma2 = sigma2;
    est.theta4 = theta4;
    est.method = method;
    if (!(sigma2 > std::numeric_limits<double>::epsilon()))
        throw degenerate_noise_error("estimated noise variance " + std::to_string(sigma2) +
                                     " is not positive; the data look constant");
    const double ratio = theta4 / (sigma2 * sigma2);
    if (!(ratio > 1.0))
        throw degenerate_noise_error("fourth-moment ratio " + std::to_string(ratio) +
                                     " <= 1; kappa is undefined for this noise estimate");
    est.kappa = std::sqrt(ratio - 1.0);
    return est;
}

// Mean of (Y_ij - Y_{i,j-1})^2/2 and ^4/2 over the 1-based columns j with
// within[j - 2] set (entry j indexes the difference ending at column j).
NoiseEstimate difference_estimate(const DataMatrix& data, const std::vector<char>& use_diff,
                                  std::size_t n_used, NoiseMethod method) {
    const std::size_t n = data.rows();
    const std::size_t p = data.cols();
    double sum2 = 0.0;
    double sum4 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = data.row(i);
        double r2 = 0.0;
        double r4 = 0.0;
        for (std::size_t j = 1; j < p; ++j) {
            if (!use_diff[j - 1]) continue;
            const double d = row[j] - row[j - 1];
            const double d2 = d * d;
            r2 += d2;
            r4 += d2 * d2;
        }
        sum2 += r2;
        sum4 += r4;
    }
    const double denom = static_cast<double>(n) * static_cast<double>(n_used);
    const double sigma2 = sum2 / (2.0 * denom);
    const double theta4 = sum4 / (2.0 * denom) - 3.0 * sigma2 * sigma2;
    return make_estimate(sigma2, theta4, method);
}

}  // namespace

NoiseEstimate estimate_lip(const DataMatrix& data) {
    std::vector<char> use_diff(data.cols() - 1, 1);
    return difference_estimate(data, use_diff, data.cols() - 1, NoiseMethod::lip);
}

NoiseEstimate estimate_pc(const DataMatrix& data, const SegmentBoundaries& segs) {
    const std::size_t p = data.cols();
    segs.validate(p);
    const std::size_t t = segs.segments();
    if (p <= t)
        throw config_error("every column is its own segment; no within-segment "
                           "differences remain");
    // difference ending at column j (1-based j = 2..p) stays within a segment
    // iff j is not a cutpoint
    std::vector<char> use_diff(p - 1, 1);
    for (std::size_t cut : segs.cutpoints)
        if (cut >= 2 && cut <= p) use_diff[cut - 2] = 0;
    return difference_estimate(data, use_diff, p - t, NoiseMethod::pc);
}

NoiseEstimate estimate_rss(const DataMatrix& data, std::size_t k_max, std::size_t max_iter) {
    const std::size_t n = data.rows();
    const std::size_t p = data.cols();
    if (p < 6) throw config_error("split-sample estimator needs p >= 6");
    if (k_max < 1 || k_max > n) throw config_error("k_max must lie in [1, n]");

    const std::size_t pa = (p + 1) / 2;  // odd 1-based columns
    const std::size_t pb = p / 2;        // even 1-based columns

    std::vector<double> half_a(n * pa);
    std::vector<double> half_b(n * pb);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = data.row(i);
        for (std::size_t j = 0; j < pa; ++j) half_a[i * pa + j] = row[2 * j];
        for (std::size_t j = 0; j < pb; ++j) half_b[i * pb + j] = row[2 * j + 1];
    }
    const CenteredMatrix xa = center_rows(DataMatrix(n, pa, std::move(half_a)));
    const CenteredMatrix xb = center_rows(DataMatrix(n, pb, std::move(half_b)));

    const Partition part = cluster(xa, k_max, max_iter);

    // cluster means of the B half over the A-half clusters
    std::vector<double> means(k_max * pb, 0.0);
    std::vector<std::size_t> counts(k_max, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = part.assignment[i];
        ++counts[c];
        const double* row = xb.row(i);
        double* m = means.data() + c * pb;
        for (std::size_t j = 0; j < pb; ++j) m[j] += row[j];
    }
    for (std::size_t c = 0; c < k_max; ++c) {
        double* m = means.data() + c * pb;
        for (std::size_t j = 0; j < pb; ++j) m[j] /= static_cast<double>(counts[c]);
    }

    double sum2 = 0.0;
    double sum4 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = xb.row(i);
        const double* m = means.data() + part.assignment[i] * pb;
        for (std::size_t j = 0; j < pb; ++j) {
            const double e = row[j] - m[j];
            const double e2 = e * e;
            sum2 += e2;
            sum4 += e2 * e2;
        }
    }
    const double denom = static_cast<double>(n) * static_cast<double>(pb);
    return make_estimate(sum2 / denom, sum4 / denom, NoiseMethod::rss);
}

std::vector<std::pair<std::size_t, double>> rss_curve(const CenteredMatrix& x, std::size_t k_min,
                                                      std::size_t k_max, std::size_t max_iter) {
    if (k_min < 1 || k_min > k_max || k_max > x.n)
        throw config_error("cluster range must satisfy 1 <= k_min <= k_max <= n");
    std::vector<std::pair<std::size_t, double>> curve;
    curve.reserve(k_max - k_min + 1);
    for (std::size_t k = k_min; k <= k_max; ++k) {
        const Partition part = cluster(x, k, max_iter);
        curve.emplace_back(k, part.within_ss / static_cast<double>(x.n));
    }
    return curve;
}

}  // namespace clusterr
