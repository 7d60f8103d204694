#include "clustercap/capacity.hpp"

#include <stdexcept>

#include "clustercap/errors.hpp"

namespace clustercap {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) {
        throw std::logic_error(std::string("internal invariant violated: ") + what);
    }
}

}  // namespace

std::vector<int> g_vector(const SystemParams& p) {
    const int q = p.k / p.n_I;
    const int r = p.k % p.n_I;
    std::vector<int> g(static_cast<size_t>(p.n_I));
    int sum = 0;
    for (int m = 1; m <= p.n_I; ++m) {
        g[static_cast<size_t>(m - 1)] = (m <= r) ? q + 1 : q;
        sum += g[static_cast<size_t>(m - 1)];
    }
    internal_check(sum == p.k, "sum of g_m must equal k");
    return g;
}

AuxSequences aux_sequences(const SystemParams& p, const Rat& epsilon) {
    if (epsilon < 0 || epsilon > 1) {
        throw InvalidResourceError("epsilon must lie in [0, 1]");
    }
    AuxSequences a;
    a.g = g_vector(p);
    a.h.assign(static_cast<size_t>(p.k) + 1, 0);
    a.z.assign(static_cast<size_t>(p.k) + 1, ExtRat::inf());
    a.y.assign(static_cast<size_t>(p.k) + 1, ExtRat::fin(0));
    a.s.assign(static_cast<size_t>(p.k) + 1, Rat(0));

    // h_t = min{s : g_1 + ... + g_s >= t}: walk the cumulative sums once.
    {
        int cluster = 1;
        int covered = a.g[0];
        for (int t = 1; t <= p.k; ++t) {
            while (covered < t) {
                ++cluster;
                covered += a.g[static_cast<size_t>(cluster - 1)];
            }
            a.h[static_cast<size_t>(t)] = cluster;
        }
        internal_check(a.h[static_cast<size_t>(p.k)] == p.n_I, "h_k must equal n_I");
    }

    // z_t = (n - n_I - t + h_t) eps + (n_I - h_t), with z_0 = inf.
    const Rat unit = Rat(p.n_I - 1) + epsilon * Rat(p.n - p.n_I);  // (n_I-1) + eps(n-n_I)
    for (int t = 1; t <= p.k; ++t) {
        const int ht = a.h[static_cast<size_t>(t)];
        Rat zt = Rat(p.n - p.n_I - t + ht) * epsilon + Rat(p.n_I - ht);
        a.z[static_cast<size_t>(t)] = ExtRat::fin(zt);
        a.y[static_cast<size_t>(t)] = (zt == 0) ? ExtRat::inf() : ExtRat::fin(unit / zt);
    }

    // s_t = (z_{t+1} + ... + z_k) / ((n_I-1) + eps(n-n_I)); suffix sums.
    internal_check(unit != 0, "normalizer (n_I-1) + eps(n-n_I) must be positive");
    Rat suffix = 0;
    for (int t = p.k - 1; t >= 0; --t) {
        suffix += a.z[static_cast<size_t>(t) + 1].value;
        a.s[static_cast<size_t>(t)] = suffix / unit;
    }

    // tau = max{t in 0..k-1 : z_t >= 1}; z_0 = inf guarantees existence.
    a.tau = 0;
    for (int t = p.k - 1; t >= 1; --t) {
        if (ext_geq_one(a.z[static_cast<size_t>(t)])) {
            a.tau = t;
            break;
        }
    }
    return a;
}

CapacityBreakdown capacity(const SystemParams& p, const ResourcePoint& r) {
    const std::vector<int> g = g_vector(p);
    CapacityBreakdown b;
    b.terms.reserve(static_cast<size_t>(p.k));
    b.omegas.reserve(static_cast<size_t>(p.k));

    // Flattened double sum: term index t = 1..k belongs to the h_t-th block.
    int t = 0;
    for (int i = 1; i <= p.n_I; ++i) {
        for (int j = 1; j <= g[static_cast<size_t>(i - 1)]; ++j) {
            ++t;
            Rat omega = Rat(p.n_I - i) * r.beta_I + Rat(p.n - p.n_I - t + i) * r.beta_c;
            b.omegas.push_back(omega);
            b.terms.push_back(omega < r.alpha ? omega : r.alpha);
            b.total += b.terms.back();
        }
    }
    internal_check(t == p.k, "capacity must have exactly k terms");
    for (size_t u = 0; u < b.omegas.size(); ++u) {
        internal_check(b.omegas[u] <= r.gamma, "every omega_t must be at most gamma");
        if (u > 0) {
            internal_check(b.omegas[u] <= b.omegas[u - 1], "omega sequence must be nonincreasing");
        }
    }
    return b;
}

CapacityBreakdown capacity_gamma_form(const SystemParams& p, const Rat& alpha, const Rat& gamma,
                                      const Rat& epsilon) {
    ResourcePoint r = make_resources_gamma(p, alpha, gamma, epsilon);
    CapacityBreakdown b = capacity(p, r);
    b.outside_feasible = (r.beta_I > alpha);

    // Cross-check the omega terms against the gamma/y_t form.
    AuxSequences a = aux_sequences(p, epsilon);
    for (int t = 1; t <= p.k; ++t) {
        const ExtRat& yt = a.y[static_cast<size_t>(t)];
        Rat via_y = yt.infinite ? Rat(0) : gamma / yt.value;
        internal_check(via_y == b.omegas[static_cast<size_t>(t - 1)],
                       "omega_t must equal gamma / y_t");
    }
    return b;
}

}  // namespace clustercap
