#include "clusterr/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "clusterr/errors.hpp"
#include "clusterr/rng.hpp"

namespace clusterr {

void DesignSpec::validate() const {
    if (k0 < 1) throw config_error("design needs at least one cluster");
    if (signals.size() != k0 * p) throw config_error("signal matrix must be k0 x p");
    if (cluster_sizes.size() != k0) throw config_error("need one cluster size per signal");
    std::size_t total = 0;
    for (std::size_t s : cluster_sizes) {
        if (s < 1) throw config_error("cluster sizes must be >= 1");
        total += s;
    }
    if (total != n)
        throw config_error("cluster sizes sum to " + std::to_string(total) + ", expected n = " +
                           std::to_string(n));
    if (sigma2 < 0.0) throw config_error("noise variance must be >= 0");
}

std::vector<double> block_signals(std::size_t p) {
    if (p == 0 || p % 5 != 0)
        throw config_error("p = " + std::to_string(p) + " is not divisible by 5");
    const std::size_t len = p / 5;
    std::vector<double> signals(10 * p, 0.0);
    for (std::size_t k = 0; k < 10; ++k) {
        const std::size_t block = k % 5;
        const double value = k < 5 ? 1.0 : -1.0;
        for (std::size_t j = 0; j < len; ++j) signals[k * p + block * len + j] = value;
    }
    return signals;
}

namespace {

std::vector<std::size_t> balanced_sizes(std::size_t n, std::size_t k0) {
    if (n % k0 != 0)
        throw config_error("n = " + std::to_string(n) + " is not divisible into " +
                           std::to_string(k0) + " equal clusters");
    return std::vector<std::size_t>(k0, n / k0);
}

std::vector<std::size_t> unbalanced_sizes(std::size_t n, std::size_t k0) {
    std::vector<std::size_t> sizes(k0);
    std::size_t total = 0;
    for (std::size_t k = 1; k <= k0; ++k) {
        sizes[k - 1] = 1 + 18 * k;
        total += sizes[k - 1];
    }
    if (total != n)
        throw config_error("the unbalanced design (sizes 1 + 18k) requires n = " +
                           std::to_string(total));
    return sizes;
}

}  // namespace

DesignSpec block_design(std::size_t n, std::size_t p, double nsr, bool balanced,
                        std::uint64_t seed) {
    if (!(nsr > 0.0)) throw config_error("noise-to-signal ratio must be > 0");
    DesignSpec spec;
    spec.n = n;
    spec.p = p;
    spec.k0 = 10;
    spec.signals = block_signals(p);
    spec.cluster_sizes = balanced ? balanced_sizes(n, spec.k0) : unbalanced_sizes(n, spec.k0);
    spec.nsr = nsr;
    spec.sigma2 = 0.16 * nsr;  // every signal row has empirical variance 0.16
    spec.seed = seed;
    spec.true_segments = SegmentBoundaries::equal_blocks(p, 5);
    spec.validate();
    return spec;
}

DesignSpec noise_only_design(std::size_t n, std::size_t p, double sigma2, std::uint64_t seed) {
    if (!(sigma2 > 0.0)) throw config_error("noise variance must be > 0");
    DesignSpec spec;
    spec.n = n;
    spec.p = p;
    spec.k0 = 1;
    spec.signals.assign(p, 0.0);
    spec.cluster_sizes = {n};
    spec.nsr = 0.0;
    spec.sigma2 = sigma2;
    spec.seed = seed;
    spec.true_segments = SegmentBoundaries::single(p);
    spec.validate();
    return spec;
}

DataMatrix generate(const DesignSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const double sigma = std::sqrt(spec.sigma2);
    std::vector<double> values(spec.n * spec.p);
    std::size_t row = 0;
    for (std::size_t k = 0; k < spec.k0; ++k) {
        const double* signal = spec.signals.data() + k * spec.p;
        for (std::size_t r = 0; r < spec.cluster_sizes[k]; ++r, ++row) {
            double* dst = values.data() + row * spec.p;
            for (std::size_t j = 0; j < spec.p; ++j) dst[j] = signal[j] + sigma * rng.normal();
        }
    }
    return DataMatrix(spec.n, spec.p, std::move(values));
}

ReplicationReport replicate(const DesignSpec& spec, std::size_t b, const EstimatorConfig& cfg,
                            std::size_t threads) {
    if (b < 1) throw config_error("need at least one replication");
    spec.validate();

    EstimatorConfig run_cfg = cfg;
    if (run_cfg.variance_method == NoiseMethod::pc && !run_cfg.segments)
        run_cfg.segments = spec.true_segments;

    ReplicationReport report;
    report.b = b;
    report.k0 = spec.k0;
    report.records.resize(b);

    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    threads = std::min(threads, b);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t r = next.fetch_add(1);
            if (r >= b) break;
            DesignSpec rep_spec = spec;
            rep_spec.seed = spec.seed + r;
            ReplicationRecord& rec = report.records[r];
            rec.rep = r;
            rec.seed = rep_spec.seed;
            try {
                const DataMatrix data = generate(rep_spec);
                const FitResult result = fit(data, run_cfg);
                rec.accepted = result.accepted();
                rec.k_hat = result.k_hat;
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& rec : report.records) {
        if (!rec.error.empty()) {
            ++report.n_failed;
            continue;
        }
        if (rec.accepted) {
            const std::size_t k_hat = *rec.k_hat;
            ++report.histogram[k_hat];
            if (k_hat < spec.k0)
                ++report.n_under;
            else if (k_hat == spec.k0)
                ++report.n_equal;
            else
                ++report.n_over;
        } else {
            // the cap was reached while still rejecting: the estimate lies
            // above the cap, which is at least k0 in any sensible run
            ++report.n_over;
        }
    }
    return report;
}

}  // namespace clusterr
