#include "clustercap/lrc.hpp"

#include <stdexcept>

#include "clustercap/errors.hpp"

namespace clustercap {

LrcParams irc_lrc_params(const SystemParams& p, const Rat& M, const Rat& alpha) {
    if (M <= 0) {
        throw std::invalid_argument("M must be positive");
    }
    if (alpha <= 0) {
        throw std::invalid_argument("alpha must be positive");
    }
    const Rat min_storage = M / Rat(p.k - p.k / p.n_I);
    if (alpha < min_storage) {
        throw InfeasibleAlphaError(
            "alpha is below the epsilon = 0 minimum storage M/(k - floor(k/n_I))");
    }
    LrcParams out;
    out.n = p.n;
    out.l0 = p.n_I - 1;
    out.m0 = p.n - p.k + 1;
    out.M = M;
    out.alpha = alpha;
    return out;
}

LrcBoundReport lrc_bound_check(const LrcParams& params) {
    if (params.l0 < 1 || params.m0 < 1 || params.n < params.m0) {
        throw std::invalid_argument("LrcParams fields are out of range");
    }
    if (params.M <= 0 || params.alpha <= 0) {
        throw std::invalid_argument("M and alpha must be positive");
    }
    LrcBoundReport rep;
    rep.lhs = params.m0;
    rep.rhs = Int(params.n) - rat_ceil(params.M / params.alpha) -
              rat_ceil(params.M / (Rat(params.l0) * params.alpha)) + 2;
    rep.slack = rep.rhs - rep.lhs;
    rep.equality = rep.slack == 0;
    return rep;
}

}  // namespace clustercap
