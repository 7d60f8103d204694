// Brute-force capacity oracle: enumerates selection vectors (how many nodes
// the data collector takes from each cluster) and ordering vectors (the order
// in which those nodes joined), evaluates the cut lower bound for each pair,
// and minimizes.  Independent of the closed-form path; used to verify it.

#ifndef CLUSTERCAP_ORACLE_HPP
#define CLUSTERCAP_ORACLE_HPP

#include <functional>
#include <vector>

#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"
#include "clustercap/resources.hpp"

namespace clustercap {

inline constexpr long long kDefaultOrderingCap = 10'000'000;

// s_1 >= s_2 >= ... >= s_L, 0 <= s_l <= n_I, sum = k.
struct SelectionVector {
    std::vector<int> s;
};

// pi_1..pi_k, cluster indices in 1..L; cluster l appears exactly s_l times.
struct OrderingVector {
    std::vector<int> pi;
};

// Validates and wraps a selection vector; non-sorted input is rejected, not
// silently sorted.
SelectionVector make_selection(const SystemParams& p, std::vector<int> values);

// All partitions of k into at most L parts, each at most n_I, as length-L
// nonincreasing vectors (padded with zeros).
std::vector<SelectionVector> enumerate_selection_vectors(const SystemParams& p);

// Number of distinct ordering vectors for s: k! / prod_l (s_l!).
Int ordering_count(const SelectionVector& s);

// Streams every distinct ordering vector of s in lexicographic order.
// Throws EnumerationTooLargeError if the count exceeds `cap`.
void for_each_ordering(const SelectionVector& s,
                       const std::function<void(const OrderingVector&)>& visit,
                       long long cap = kDefaultOrderingCap);

// Deterministic round-robin ordering: cycle through clusters that still have
// unselected nodes, restarting at cluster 1 whenever the cursor lands on an
// exhausted cluster.
OrderingVector vertical_ordering(const SelectionVector& s);

// Fill whole clusters first: n_I, n_I, ..., then the remainder, then zeros.
SelectionVector horizontal_selection(const SystemParams& p);

// L(s, pi) = sum_i min{alpha, a_i beta_I + (n - i - a_i) beta_c} where
// a_i = n_I - 1 - (number of earlier entries of pi in the same cluster).
Rat cut_lower_bound(const SystemParams& p, const ResourcePoint& r, const SelectionVector& s,
                    const OrderingVector& pi);

struct BruteForceResult {
    Rat capacity;
    SelectionVector argmin_s;
    OrderingVector argmin_pi;
};

// Exact minimum of cut_lower_bound over every (s, pi) pair, with one
// minimizing witness.  Throws EnumerationTooLargeError if any single
// selection vector has more than `cap` orderings.
BruteForceResult brute_force_capacity(const SystemParams& p, const ResourcePoint& r,
                                      long long cap = kDefaultOrderingCap);

// Capacity when each repair contacts d_I intra-cluster and d_c cross-cluster
// helpers, with gamma_I and gamma_c from `r` held fixed as totals (so the
// per-helper bandwidths become gamma_I/d_I and gamma_c/d_c).
Rat general_capacity(const SystemParams& p, int d_I, int d_c, const ResourcePoint& r,
                     long long cap = kDefaultOrderingCap);

}  // namespace clustercap

#endif
