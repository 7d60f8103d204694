// A resource point: per-node storage alpha, per-helper intra-cluster repair
// bandwidth beta_I and cross-cluster repair bandwidth beta_c, plus the derived
// totals gamma_I = d_I*beta_I, gamma_c = d_c*beta_c, gamma = gamma_I + gamma_c
// and the ratios epsilon = beta_c/beta_I, xi = gamma_c/gamma.

#ifndef CLUSTERCAP_RESOURCES_HPP
#define CLUSTERCAP_RESOURCES_HPP

#include <optional>

#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"

namespace clustercap {

struct ResourcePoint {
    Rat alpha;
    Rat beta_I;
    Rat beta_c;
    Rat gamma_I;
    Rat gamma_c;
    Rat gamma;

    // beta_c / beta_I; undefined (nullopt) when beta_I = 0 (then beta_c = 0
    // too, since beta_I >= beta_c is enforced).
    std::optional<Rat> epsilon;
    // gamma_c / gamma; undefined when gamma = 0.
    std::optional<Rat> xi;
};

// Build from explicit per-helper bandwidths.  Rejects negative values and
// beta_c > beta_I (equivalently epsilon > 1) with InvalidResourceError.
ResourcePoint make_resources(const SystemParams& p, const Rat& alpha, const Rat& beta_I,
                             const Rat& beta_c);

// Build from a (gamma, epsilon) pair: beta_I = gamma / (n_I-1 + (n-n_I)*eps),
// beta_c = eps * beta_I.  Requires 0 <= eps <= 1 and gamma >= 0.
ResourcePoint make_resources_gamma(const SystemParams& p, const Rat& alpha, const Rat& gamma,
                                   const Rat& epsilon);

// Build from a (gamma, xi) split of total repair bandwidth:
// gamma_I = (1-xi)*gamma, gamma_c = xi*gamma.  Requires 0 <= xi <= 1 and the
// resulting beta_I >= beta_c.
ResourcePoint make_resources_xi(const SystemParams& p, const Rat& alpha, const Rat& gamma,
                                const Rat& xi);

}  // namespace clustercap

#endif
