// Error taxonomy.  Every rejection the library performs has a dedicated type
// so callers (and tests) can tell validation failures apart; all derive from
// std::runtime_error via Error.

#ifndef CLUSTERCAP_ERRORS_HPP
#define CLUSTERCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clustercap {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- parameter validation ---
struct NonDivisibleError : Error {        // L does not divide n
    using Error::Error;
};
struct TooFewClustersError : Error {      // L < 2
    using Error::Error;
};
struct KOutOfRangeError : Error {         // k <= n_I or k > n
    using Error::Error;
};
struct DegenerateClusterError : Error {   // n_I < 2
    using Error::Error;
};

// --- resource validation ---
struct InvalidResourceError : Error {     // negative value, beta_c > beta_I, eps > 1, ...
    using Error::Error;
};

// --- oracle ---
struct EnumerationTooLargeError : Error { // ordering count exceeds the cap
    using Error::Error;
};

// --- flowgraph ---
struct ScalingOverflowError : Error {     // unit sub-edge count exceeds the bound
    using Error::Error;
};

// --- tradeoff ---
struct KEqualsNError : Error {            // min_storage_feasible needs k < n
    using Error::Error;
};
struct NotBandwidthLimitedError : Error { // asymptotic bounds need gamma == alpha
    using Error::Error;
};

// --- lrc ---
struct InfeasibleAlphaError : Error {     // alpha below the epsilon=0 minimum
    using Error::Error;
};

}  // namespace clustercap

#endif
