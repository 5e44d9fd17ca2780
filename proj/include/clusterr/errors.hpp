#pragma once

#include <stdexcept>
#include <string>

namespace clusterr {

// Malformed input files (CSV parsing, JSON loading).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent or out-of-range parameters and shapes.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Noise estimation collapsed: sigma^2 <= 0 or theta4/sigma^4 <= 1.
// The downstream statistics are undefined in this case, so the pipeline
// aborts instead of continuing with kappa = 0.
struct degenerate_noise_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stepwise threshold q_chi(i*alpha/n) landed at zero, so the rescaled
// order statistic is undefined.
struct undefined_rescaling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace clusterr
