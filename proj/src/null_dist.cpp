#include "clusterr/null_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "clusterr/errors.hpp"

namespace clusterr {

namespace detail {

namespace {

constexpr double kEps = 1e-16;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// Lower series: P(a,x) = x^a e^-x / Gamma(a) * sum_k x^k / (a+1)...(a+k)
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int k = 0; k < 1000; ++k) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper continued fraction (modified Lentz): Q(a,x) for x > a + 1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

}  // namespace detail

namespace {

// chi2_d CDF / SF evaluated at t: gamma with a = d/2 at x = t/2.
double chi2_cdf(double df, double t) { return detail::gamma_p(0.5 * df, 0.5 * t); }
double chi2_sf(double df, double t) { return detail::gamma_q(0.5 * df, 0.5 * t); }

struct SizeGroup {
    std::size_t m = 1;       // block size in subjects
    std::size_t count = 1;   // how many blocks of this size
};

// log P(max_l Lambda_l <= x) = sum over groups of count * log1p(-Q_m(x)),
// with Lambda ~ (chi2_{mp} - mp) / sqrt(2 p N). -inf when some factor is 0.
double log_cdf_groups(std::size_t p, std::size_t nominal_len,
                      const std::vector<SizeGroup>& groups, double x) {
    const double scale = std::sqrt(2.0 * static_cast<double>(p) * static_cast<double>(nominal_len));
    double log_cdf = 0.0;
    for (const auto& g : groups) {
        const double mp = static_cast<double>(g.m) * static_cast<double>(p);
        const double t = mp + x * scale;
        if (t <= 0.0) return -std::numeric_limits<double>::infinity();
        const double sf = chi2_sf(mp, t);
        if (sf >= 1.0) return -std::numeric_limits<double>::infinity();
        log_cdf += static_cast<double>(g.count) * std::log1p(-sf);
    }
    return log_cdf;
}

std::vector<SizeGroup> group_sizes(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SizeGroup> groups;
    for (std::size_t v : sorted) {
        if (!groups.empty() && groups.back().m == v)
            ++groups.back().count;
        else
            groups.push_back({v, 1});
    }
    return groups;
}

// Smallest x with log-CDF >= log(1 - alpha), found by bracketed bisection.
// The CDF is continuous and strictly increasing on its support, so this is
// the (1-alpha)-quantile.
double quantile_groups(std::size_t p, std::size_t nominal_len,
                       const std::vector<SizeGroup>& groups, double alpha) {
    const double target = std::log1p(-alpha);

    const double scale = std::sqrt(2.0 * static_cast<double>(p) * static_cast<double>(nominal_len));
    double support = -std::numeric_limits<double>::infinity();
    for (const auto& g : groups)
        support = std::max(support, -static_cast<double>(g.m) * static_cast<double>(p) / scale);

    double lo = support;
    double hi = 1.0;
    while (log_cdf_groups(p, nominal_len, groups, hi) < target) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (log_cdf_groups(p, nominal_len, groups, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

}  // namespace

double chi2_rescaled_cdf(std::size_t p, double x) {
    const double dp = static_cast<double>(p);
    return chi2_cdf(dp, dp + x * std::sqrt(2.0 * dp));
}

double chi2_rescaled_sf(std::size_t p, double x) {
    const double dp = static_cast<double>(p);
    const double t = dp + x * std::sqrt(2.0 * dp);
    if (t <= 0.0) return 1.0;
    return chi2_sf(dp, t);
}

double pointwise_quantile(std::size_t p, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw config_error("beta must lie in (0,1)");
    if (p < 1) throw config_error("p must be >= 1");
    return quantile_groups(p, 1, {{1, 1}}, beta);
}

BlockNull BlockNull::regular(std::size_t p, std::size_t n, std::size_t block_len) {
    if (p < 1) throw config_error("p must be >= 1");
    if (n < 1) throw config_error("n must be >= 1");
    if (block_len < 1 || block_len > n)
        throw config_error("block length must lie in [1, n]");
    BlockNull null;
    null.p = p;
    null.nominal_len = block_len;
    const std::size_t full = n / block_len;
    null.sizes.assign(full, block_len);
    if (n % block_len) null.sizes.push_back(n % block_len);
    return null;
}

double blocked_cdf(const BlockNull& null, double x) {
    const double lc = log_cdf_groups(null.p, null.nominal_len, group_sizes(null.sizes), x);
    return std::exp(lc);
}

double blocked_quantile(const BlockNull& null, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw config_error("alpha must lie in (0,1)");
    return quantile_groups(null.p, null.nominal_len, group_sizes(null.sizes), alpha);
}

double blocked_pvalue(const BlockNull& null, double h) {
    const double lc = log_cdf_groups(null.p, null.nominal_len, group_sizes(null.sizes), h);
    if (lc == -std::numeric_limits<double>::infinity()) return 1.0;
    return -std::expm1(lc);
}

double max_quantile(std::size_t p, std::size_t n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw config_error("alpha must lie in (0,1)");
    if (p < 1 || n < 1) throw config_error("p and n must be >= 1");
    return quantile_groups(p, 1, {{1, n}}, alpha);
}

double max_pvalue(std::size_t p, std::size_t n, double h) {
    if (p < 1 || n < 1) throw config_error("p and n must be >= 1");
    const double lc = log_cdf_groups(p, 1, {{1, n}}, h);
    if (lc == -std::numeric_limits<double>::infinity()) return 1.0;
    return -std::expm1(lc);
}

std::vector<double> fdr_thresholds(std::size_t p, std::size_t n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw config_error("alpha must lie in (0,1)");
    if (p < 1 || n < 1) throw config_error("p and n must be >= 1");
    std::vector<double> thresholds(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double beta = alpha * static_cast<double>(i) / static_cast<double>(n);
        if (!(beta < 1.0)) throw config_error("i*alpha/n must stay below 1");
        const double q = pointwise_quantile(p, beta);
        if (std::fabs(q) <= 1e-12)
            throw undefined_rescaling_error(
                "threshold q_chi(" + std::to_string(beta) + ") is zero; the rescaled order "
                "statistic is undefined for this alpha/n combination");
        thresholds[i - 1] = q;
    }
    return thresholds;
}

}  // namespace clusterr
