#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterr/data_matrix.hpp"
#include "clusterr/estimator.hpp"
#include "clusterr/noise.hpp"

namespace clusterr {

/// Data-generating design: k0 signal profiles, cluster sizes, i.i.d.
/// Gaussian noise. Rows are laid out cluster by cluster in order.
struct DesignSpec {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t k0 = 0;
    std::vector<double> signals;              // k0 x p, row-major
    std::vector<std::size_t> cluster_sizes;   // k0 entries summing to n
    double sigma2 = 0.0;
    double nsr = 0.0;                          // informational; sigma2 = 0.16 * nsr for the block design
    std::uint64_t seed = 0;
    SegmentBoundaries true_segments;           // segment structure of the signals

    void validate() const;  // throws config_error
};

/// The ten block signal vectors: five blocks of length p/5, one block set
/// to +1 or -1 per profile. Every row has empirical variance 0.16 exactly.
/// Requires p divisible by 5.
std::vector<double> block_signals(std::size_t p);

/// Ten-cluster block design with noise variance 0.16 * nsr. Balanced uses
/// sizes n/k0 (n divisible by 10); unbalanced uses sizes 1 + 18k, which
/// requires n = 1000.
DesignSpec block_design(std::size_t n, std::size_t p, double nsr, bool balanced,
                        std::uint64_t seed);

/// Single zero signal profile: pure noise with the given variance.
DesignSpec noise_only_design(std::size_t n, std::size_t p, double sigma2,
                             std::uint64_t seed);

/// Draws signal + N(0, sigma2) noise with the seeded generator.
DataMatrix generate(const DesignSpec& spec);

struct ReplicationRecord {
    std::size_t rep = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> k_hat;
    bool accepted = false;
    std::string error;  // non-empty when the estimator failed on this draw
};

struct ReplicationReport {
    std::size_t b = 0;
    std::size_t k0 = 0;
    std::map<std::size_t, std::size_t> histogram;  // k_hat -> count
    std::size_t n_under = 0;
    std::size_t n_equal = 0;
    std::size_t n_over = 0;   // includes no-acceptance outcomes (k_hat > cap >= k0)
    std::size_t n_failed = 0;
    std::vector<ReplicationRecord> records;

    double freq_under() const { return static_cast<double>(n_under) / static_cast<double>(b); }
    double freq_equal() const { return static_cast<double>(n_equal) / static_cast<double>(b); }
    double freq_over() const { return static_cast<double>(n_over) / static_cast<double>(b); }
};

/// Runs the estimator on b independently seeded draws (seed_r = spec.seed + r)
/// and aggregates the outcomes. Replications run in parallel across threads;
/// the aggregation is order-independent. If cfg uses the pc estimator without
/// explicit segments, the design's true segment boundaries are used.
ReplicationReport replicate(const DesignSpec& spec, std::size_t b,
                            const EstimatorConfig& cfg, std::size_t threads = 0);

}  // namespace clusterr
