#pragma once

#include <cstddef>
#include <vector>

namespace clusterr {

// Null law of the individual statistics: Z = (chi2_p - p) / sqrt(2p).
// Everything here is analytic; no Monte Carlo.

/// P(Z <= x). Zero below the support point x = -sqrt(p/2).
double chi2_rescaled_cdf(std::size_t p, double x);

/// P(Z > x), computed directly in the upper tail for accuracy.
double chi2_rescaled_sf(std::size_t p, double x);

/// (1-beta)-quantile of Z.
double pointwise_quantile(std::size_t p, double beta);

/// Null description for the maximum of blockwise averages
///   Lambda_l = (1/sqrt(N)) * sum of m_l i.i.d. Z terms,
/// i.e. Lambda_l ~ (chi2_{m_l p} - m_l p) / sqrt(2 p N). The plain maximum
/// statistic is the special case of n unit blocks with N = 1.
struct BlockNull {
    std::size_t p = 0;
    std::size_t nominal_len = 1;      // N in the 1/sqrt(2pN) scaling
    std::vector<std::size_t> sizes;   // block sizes m_l, sum = n

    // ceil(n/N) blocks of length N, last one short when N does not divide n
    static BlockNull regular(std::size_t p, std::size_t n, std::size_t block_len);
};

double blocked_cdf(const BlockNull& null, double x);
double blocked_quantile(const BlockNull& null, double alpha);
double blocked_pvalue(const BlockNull& null, double h);

/// (1-alpha)-quantile of max of n i.i.d. Z draws.
double max_quantile(std::size_t p, std::size_t n, double alpha);

/// P(max of n i.i.d. Z draws > h).
double max_pvalue(std::size_t p, std::size_t n, double h);

/// Stepwise thresholds q_chi(i*alpha/n) for i = 1..n, used by the
/// FDR-style statistic. Throws undefined_rescaling_error if a threshold
/// lies within 1e-12 of zero.
std::vector<double> fdr_thresholds(std::size_t p, std::size_t n, double alpha);

namespace detail {
/// Regularized lower incomplete gamma P(a, x); series expansion for
/// x < a + 1, continued fraction otherwise. Accurate to ~1e-14 relative.
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);
}  // namespace detail

}  // namespace clusterr
