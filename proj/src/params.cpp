#include "clustercap/params.hpp"

#include <string>

#include "clustercap/errors.hpp"

namespace clustercap {

SystemParams validate_params(int n, int k, int L) {
    if (L < 2)
        throw TooFewClustersError("need at least 2 clusters, got L=" + std::to_string(L));
    if (n < 1 || n % L != 0)
        throw NonDivisibleError("cluster count L=" + std::to_string(L) +
                                " must divide node count n=" + std::to_string(n));
    int n_I = n / L;
    if (n_I < 2)
        throw DegenerateClusterError("need at least 2 nodes per cluster, got n_I=" +
                                     std::to_string(n_I));
    if (k <= n_I || k > n)
        throw KOutOfRangeError("k must satisfy n_I < k <= n; got k=" + std::to_string(k) +
                               " with n_I=" + std::to_string(n_I) + ", n=" + std::to_string(n));
    SystemParams p;
    p.n = n;
    p.k = k;
    p.L = L;
    p.n_I = n_I;
    p.d_I = n_I - 1;
    p.d_c = n - n_I;
    return p;
}

}  // namespace clustercap
