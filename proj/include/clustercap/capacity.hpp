// Closed-form storage capacity of a clustered distributed storage system and
// the auxiliary sequences (g, h, z, y, s, tau) used by the tradeoff analysis.

#ifndef CLUSTERCAP_CAPACITY_HPP
#define CLUSTERCAP_CAPACITY_HPP

#include <vector>

#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"
#include "clustercap/resources.hpp"

namespace clustercap {

// g_m = floor(k/n_I) + 1 for m <= (k mod n_I), else floor(k/n_I).
// Length n_I, entries sum to k.
std::vector<int> g_vector(const SystemParams& p);

// Sequences driving the gamma-parameterized capacity expression.  Indexing
// follows the analysis: h_t for t = 1..k (h[0] unused), z_t for t = 0..k with
// z_0 = infinity, y_t for t = 1..k (y[0] unused; infinite when z_t = 0),
// s_t for t = 0..k with s_k = 0.
struct AuxSequences {
    std::vector<int> g;     // size n_I
    std::vector<int> h;     // size k+1, h[0] unused
    std::vector<ExtRat> z;  // size k+1, z[0] = inf
    std::vector<ExtRat> y;  // size k+1, y[0] unused
    std::vector<Rat> s;     // size k+1
    int tau = 0;            // max{t in 0..k-1 : z_t >= 1}
};

AuxSequences aux_sequences(const SystemParams& p, const Rat& epsilon);

struct CapacityBreakdown {
    std::vector<Rat> terms;   // k entries, term t = min{alpha, omega_t}
    std::vector<Rat> omegas;  // k entries, nonincreasing
    Rat total = 0;
    // Set by capacity_gamma_form when the implied beta_I exceeds alpha; the
    // value is still exact, but the point lies outside the usual operating
    // region gamma <= gamma_bar.
    bool outside_feasible = false;
};

// Closed-form capacity: C = sum_t min{alpha, omega_t} with
// omega_t = (n_I - h_t) beta_I + (n - n_I - t + h_t) beta_c.
CapacityBreakdown capacity(const SystemParams& p, const ResourcePoint& r);

// Capacity as a function of (alpha, gamma, epsilon): splits gamma into
// per-helper bandwidths via beta_I = gamma / ((n_I-1) + (n-n_I) eps) and
// evaluates capacity().  Flags outside_feasible when beta_I > alpha.
CapacityBreakdown capacity_gamma_form(const SystemParams& p, const Rat& alpha, const Rat& gamma,
                                      const Rat& epsilon);

}  // namespace clustercap

#endif
