#include "clustercap/resources.hpp"

#include "clustercap/errors.hpp"

namespace clustercap {

namespace {

ResourcePoint finish(const SystemParams& p, Rat alpha, Rat beta_I, Rat beta_c) {
    ResourcePoint r;
    r.alpha = std::move(alpha);
    r.beta_I = std::move(beta_I);
    r.beta_c = std::move(beta_c);
    r.gamma_I = Rat(p.d_I) * r.beta_I;
    r.gamma_c = Rat(p.d_c) * r.beta_c;
    r.gamma = r.gamma_I + r.gamma_c;
    if (r.beta_I != 0) {
        r.epsilon = r.beta_c / r.beta_I;
    }
    if (r.gamma != 0) {
        r.xi = r.gamma_c / r.gamma;
    }
    return r;
}

}  // namespace

ResourcePoint make_resources(const SystemParams& p, const Rat& alpha, const Rat& beta_I,
                             const Rat& beta_c) {
    if (alpha < 0) {
        throw InvalidResourceError("alpha must be nonnegative");
    }
    if (beta_I < 0 || beta_c < 0) {
        throw InvalidResourceError("bandwidths must be nonnegative");
    }
    if (beta_c > beta_I) {
        throw InvalidResourceError(
            "cross-cluster bandwidth beta_c must not exceed intra-cluster bandwidth beta_I");
    }
    return finish(p, alpha, beta_I, beta_c);
}

ResourcePoint make_resources_gamma(const SystemParams& p, const Rat& alpha, const Rat& gamma,
                                   const Rat& epsilon) {
    if (alpha < 0) {
        throw InvalidResourceError("alpha must be nonnegative");
    }
    if (gamma < 0) {
        throw InvalidResourceError("gamma must be nonnegative");
    }
    if (epsilon < 0 || epsilon > 1) {
        throw InvalidResourceError("epsilon must lie in [0, 1]");
    }
    // gamma = (n_I - 1) beta_I + (n - n_I) beta_c with beta_c = eps * beta_I.
    Rat denom = Rat(p.n_I - 1) + Rat(p.n - p.n_I) * epsilon;
    Rat beta_I = gamma / denom;
    Rat beta_c = epsilon * beta_I;
    return finish(p, alpha, beta_I, beta_c);
}

ResourcePoint make_resources_xi(const SystemParams& p, const Rat& alpha, const Rat& gamma,
                                const Rat& xi) {
    if (alpha < 0) {
        throw InvalidResourceError("alpha must be nonnegative");
    }
    if (gamma < 0) {
        throw InvalidResourceError("gamma must be nonnegative");
    }
    if (xi < 0 || xi > 1) {
        throw InvalidResourceError("xi must lie in [0, 1]");
    }
    Rat beta_I = (Rat(1) - xi) * gamma / Rat(p.d_I);
    Rat beta_c = xi * gamma / Rat(p.d_c);
    if (beta_c > beta_I) {
        throw InvalidResourceError("xi split yields beta_c > beta_I");
    }
    return finish(p, alpha, beta_I, beta_c);
}

}  // namespace clustercap
