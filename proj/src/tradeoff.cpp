#include "clustercap/tradeoff.hpp"

#include <stdexcept>

#include "clustercap/capacity.hpp"
#include "clustercap/errors.hpp"

namespace clustercap {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) {
        throw std::logic_error(std::string("internal invariant violated: ") + what);
    }
}

void require_positive(const Rat& v, const char* name) {
    if (v <= 0) {
        throw std::invalid_argument(std::string(name) + " must be positive");
    }
}

Rat z_suffix_sum(const AuxSequences& a, int from_exclusive, int k) {
    Rat sum = 0;
    for (int i = from_exclusive + 1; i <= k; ++i) {
        sum += a.z[static_cast<size_t>(i)].value;
    }
    return sum;
}

}  // namespace

TradeoffCurve tradeoff_curve(const SystemParams& p, const Rat& epsilon, const Rat& M) {
    require_positive(M, "M");
    const AuxSequences a = aux_sequences(p, epsilon);

    TradeoffCurve curve;
    curve.M = M;
    curve.epsilon = epsilon;

    // Saturated-bandwidth regime: with beta_I capped at alpha, at most tau
    // capacity terms can reach alpha.  When epsilon*(n-k) >= 1 the cap never
    // binds and the curve starts at alpha = M/k.
    const bool uncapped = (p.k < p.n) && (epsilon * Rat(p.n - p.k) >= 1);
    int t_start;
    if (uncapped) {
        t_start = p.k - 1;
        curve.infeasible_below = M / Rat(p.k);
        if (epsilon * Rat(p.n - p.k) == 1) {
            // Both regime formulas must coincide exactly on the boundary.
            internal_check(a.tau == p.k - 1 && M / (Rat(a.tau) + z_suffix_sum(a, a.tau, p.k)) ==
                                                   curve.infeasible_below,
                           "regime formulas must agree at epsilon = 1/(n-k)");
        }
    } else {
        t_start = a.tau;
        curve.infeasible_below = M / (Rat(a.tau) + z_suffix_sum(a, a.tau, p.k));
    }

    Rat next_lo = curve.infeasible_below;
    for (int t = t_start; t >= 1; --t) {
        const Rat& st = a.s[static_cast<size_t>(t)];
        internal_check(!a.y[static_cast<size_t>(t)].infinite,
                       "y_t must be finite on emitted segments");
        const Rat yt = a.y[static_cast<size_t>(t)].value;
        if (st == 0) {
            // Degenerate leftmost piece (epsilon = 0): gamma* is defined only
            // at the single threshold alpha, where the next segment takes the
            // same value by continuity.
            internal_check(t == t_start, "s_t can vanish only on the first piece");
            continue;
        }
        const Rat hi = M / (Rat(t) + st * yt);
        internal_check(next_lo <= hi, "segment ends must be ordered");
        if (next_lo < hi) {
            curve.segments.push_back(CurveSegment{next_lo, ExtRat::fin(hi), t, st});
            next_lo = hi;
        }
    }
    internal_check(next_lo == M / a.s[0], "affine pieces must end at the flat MBR level");
    curve.segments.push_back(CurveSegment{next_lo, ExtRat::inf(), 0, a.s[0]});

    // Continuity and monotonicity across the assembled curve.
    for (size_t i = 0; i + 1 < curve.segments.size(); ++i) {
        const CurveSegment& cur = curve.segments[i];
        const CurveSegment& nxt = curve.segments[i + 1];
        internal_check(cur.alpha_hi == ExtRat::fin(nxt.alpha_lo), "segments must be contiguous");
        const Rat boundary = nxt.alpha_lo;
        const Rat left = (M - Rat(cur.t) * boundary) / cur.s_t;
        const Rat right = (M - Rat(nxt.t) * boundary) / nxt.s_t;
        internal_check(left == right, "gamma* must be continuous at breakpoints");
        internal_check(cur.t > nxt.t, "saturation count must decrease along the curve");
    }
    return curve;
}

std::optional<Rat> curve_evaluate(const TradeoffCurve& curve, const Rat& alpha) {
    require_positive(alpha, "alpha");
    if (alpha < curve.infeasible_below) {
        return std::nullopt;
    }
    for (const CurveSegment& seg : curve.segments) {
        if (alpha >= seg.alpha_lo &&
            (seg.alpha_hi.infinite || alpha < seg.alpha_hi.value)) {
            return (curve.M - Rat(seg.t) * alpha) / seg.s_t;
        }
    }
    throw std::logic_error("internal invariant violated: curve must cover the feasible range");
}

std::optional<Rat> gamma_star(const SystemParams& p, const Rat& epsilon, const Rat& alpha,
                              const Rat& M) {
    return curve_evaluate(tradeoff_curve(p, epsilon, M), alpha);
}

ExtremalPoint msr_point(const SystemParams& p, const Rat& epsilon, const Rat& M) {
    require_positive(M, "M");
    const AuxSequences a = aux_sequences(p, epsilon);
    ExtremalPoint pt;
    pt.kind = ExtremalKind::MSR;
    pt.epsilon = epsilon;
    if (p.k < p.n && epsilon * Rat(p.n - p.k) >= 1) {
        pt.alpha = M / Rat(p.k);
        pt.gamma = pt.alpha / a.s[static_cast<size_t>(p.k - 1)];
    } else {
        const Rat unit = Rat(p.n_I - 1) + epsilon * Rat(p.n - p.n_I);
        pt.alpha = M / (Rat(a.tau) + z_suffix_sum(a, a.tau, p.k));
        pt.gamma = pt.alpha * unit;  // the beta_I = alpha cap binds here
    }
    return pt;
}

ExtremalPoint mbr_point(const SystemParams& p, const Rat& epsilon, const Rat& M) {
    require_positive(M, "M");
    const AuxSequences a = aux_sequences(p, epsilon);
    ExtremalPoint pt;
    pt.kind = ExtremalKind::MBR;
    pt.epsilon = epsilon;
    pt.alpha = M / a.s[0];
    pt.gamma = pt.alpha;
    return pt;
}

bool min_storage_feasible(const SystemParams& p, const Rat& epsilon) {
    if (p.k == p.n) {
        throw KEqualsNError("minimum-storage feasibility requires k < n");
    }
    if (epsilon < 0 || epsilon > 1) {
        throw InvalidResourceError("epsilon must lie in [0, 1]");
    }
    return epsilon * Rat(p.n - p.k) >= 1;
}

std::optional<Rat> beta_c_star(const SystemParams& p, const Rat& M, const Rat& alpha) {
    require_positive(M, "M");
    require_positive(alpha, "alpha");
    if (alpha < M / Rat(p.k)) {
        return std::nullopt;  // capacity <= k*alpha < M no matter the bandwidth
    }
    const int k0 = p.k - p.k / p.n_I;
    if (alpha >= M / Rat(k0)) {
        return Rat(0);
    }

    // S_m = sum_{i=m+1}^{k} (n-i); f_m = m + S_m/(n-m).  Walk the segments
    // from m = k-1 down to k0; alpha lies in [M/f_{m+1}, M/f_m), except that
    // the last segment stretches to M/k0.
    Rat S = 0;  // S_k
    Rat f_next = Rat(p.k);  // f_k = k
    for (int m = p.k - 1; m >= k0; --m) {
        S += Rat(p.n - (m + 1));  // S_m
        const Rat f_m = Rat(m) + S / Rat(p.n - m);
        const Rat left = M / f_next;                                  // M / f_{m+1}
        const Rat right = (m == k0) ? M / Rat(k0) : M / f_m;
        if (alpha >= left && alpha < right) {
            const Rat numerator = M - Rat(m) * alpha;
            if (S == 0) {
                // k = n makes the first segment's denominator vanish while
                // the numerator stays positive: no finite beta_c suffices.
                internal_check(numerator > 0, "zero-denominator segment must be infeasible");
                return std::nullopt;
            }
            return numerator / S;
        }
        f_next = f_m;
    }
    throw std::logic_error("internal invariant violated: beta_c* segments must cover [M/k, M/k0)");
}

AsymptoticBounds asymptotic_bounds(const SystemParams& p, const ResourcePoint& r) {
    if (r.gamma != r.alpha) {
        throw NotBandwidthLimitedError("asymptotic bounds hold only for gamma = alpha");
    }
    AsymptoticBounds b;
    b.c_bar = Rat(p.k) * (Rat(p.n_I - 1) * r.beta_I + Rat(2 * p.n - p.n_I - p.k) * r.beta_c) / 2;
    b.delta = Rat(p.n_I) * Rat(p.n_I) * (r.beta_I - r.beta_c) / 8;

    // In this regime the true capacity differs from c_bar by exactly
    // r(n_I - r)(beta_I - beta_c)/2 with r = k mod n_I, which also proves the
    // sandwich c_bar <= C <= c_bar + delta.
    const int rem = p.k % p.n_I;
    const Rat gap = Rat(rem * (p.n_I - rem)) * (r.beta_I - r.beta_c) / 2;
    internal_check(capacity(p, r).total == b.c_bar + gap,
                   "capacity must exceed the asymptotic bound by the exact remainder term");
    internal_check(gap >= 0 && gap <= b.delta, "remainder term must fit within delta");
    return b;
}

}  // namespace clustercap
