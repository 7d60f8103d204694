// Locally repairable view of intra-cluster-repair systems: the locality and
// minimum distance induced at epsilon = 0, and the distance bound they must
// satisfy.

#ifndef CLUSTERCAP_LRC_HPP
#define CLUSTERCAP_LRC_HPP

#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"

namespace clustercap {

struct LrcParams {
    int n = 0;
    int l0 = 0;  // repair locality: a failed symbol is rebuilt from l0 others
    int m0 = 0;  // minimum distance of the induced code
    Rat M;       // file size
    Rat alpha;   // per-symbol storage
};

// Parameters of the locally repairable code induced by an epsilon = 0 system
// storing M at per-node size alpha.  alpha must reach the epsilon = 0
// minimum storage M/(k - floor(k/n_I)) (InfeasibleAlphaError otherwise).
LrcParams irc_lrc_params(const SystemParams& p, const Rat& M, const Rat& alpha);

struct LrcBoundReport {
    Int lhs;   // m0
    Int rhs;   // n - ceil(M/alpha) - ceil(M/(l0*alpha)) + 2
    Int slack; // rhs - lhs; nonnegative wherever the parameters are feasible
    bool equality = false;
};

// Evaluates the distance bound m0 <= n - ceil(M/alpha) - ceil(M/(l0*alpha)) + 2
// with exact rational ceilings.
LrcBoundReport lrc_bound_check(const LrcParams& params);

}  // namespace clustercap

#endif
