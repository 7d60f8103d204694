// Resource tradeoffs at a fixed file size M: the minimum total repair
// bandwidth gamma*(alpha), its extremal MSR/MBR points, feasibility of
// minimum storage, the minimum cross-cluster bandwidth beta_c*(alpha) when
// beta_I = alpha, and the asymptotic capacity sandwich for gamma = alpha.

#ifndef CLUSTERCAP_TRADEOFF_HPP
#define CLUSTERCAP_TRADEOFF_HPP

#include <optional>
#include <vector>

#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"
#include "clustercap/resources.hpp"

namespace clustercap {

// One affine piece of gamma*(alpha): on [alpha_lo, alpha_hi) the minimum
// bandwidth is (M - t*alpha) / s_t, i.e. slope -t/s_t.  The final segment has
// t = 0 (constant M/s_0) and an infinite right end.
struct CurveSegment {
    Rat alpha_lo;
    ExtRat alpha_hi;
    int t = 0;
    Rat s_t;
};

struct TradeoffCurve {
    Rat M;
    Rat epsilon;
    Rat infeasible_below;  // gamma* is undefined for alpha below this
    std::vector<CurveSegment> segments;
};

// Exact piecewise-affine threshold curve; the regime switches on whether
// epsilon*(n-k) reaches 1 (for k = n only the capped regime applies).
TradeoffCurve tradeoff_curve(const SystemParams& p, const Rat& epsilon, const Rat& M);

// gamma* at one alpha; nullopt when alpha is below the feasibility threshold.
std::optional<Rat> curve_evaluate(const TradeoffCurve& curve, const Rat& alpha);
std::optional<Rat> gamma_star(const SystemParams& p, const Rat& epsilon, const Rat& alpha,
                              const Rat& M);

enum class ExtremalKind { MSR, MBR };

struct ExtremalPoint {
    Rat alpha;
    Rat gamma;
    ExtremalKind kind;
    Rat epsilon;
};

// Minimum-storage point of the curve: (M/k, (M/k)/s_{k-1}) when
// epsilon*(n-k) >= 1, otherwise the leftmost feasible point, where
// gamma* meets the beta_I <= alpha cap.
ExtremalPoint msr_point(const SystemParams& p, const Rat& epsilon, const Rat& M);

// Minimum-bandwidth point: alpha = gamma = M/s_0.
ExtremalPoint mbr_point(const SystemParams& p, const Rat& epsilon, const Rat& M);

// Whether alpha = M/k is achievable; requires k < n (KEqualsNError otherwise).
bool min_storage_feasible(const SystemParams& p, const Rat& epsilon);

// Minimum cross-cluster bandwidth sustaining M when beta_I = alpha; nullopt
// when alpha < M/k (infeasible even with beta_c = beta_I).
std::optional<Rat> beta_c_star(const SystemParams& p, const Rat& M, const Rat& alpha);

// Lower bound c_bar and gap delta with c_bar <= capacity <= c_bar + delta;
// only valid in the bandwidth-limited regime gamma = alpha
// (NotBandwidthLimitedError otherwise).
struct AsymptoticBounds {
    Rat c_bar;
    Rat delta;
};
AsymptoticBounds asymptotic_bounds(const SystemParams& p, const ResourcePoint& r);

}  // namespace clustercap

#endif
