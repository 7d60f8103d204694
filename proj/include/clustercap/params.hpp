// System parameters of a clustered distributed storage system: n nodes split
// into L clusters of n_I nodes each, a data collector contacting k nodes, and
// the maximum-helper repair setting d_I = n_I - 1, d_c = n - n_I.

#ifndef CLUSTERCAP_PARAMS_HPP
#define CLUSTERCAP_PARAMS_HPP

namespace clustercap {

struct SystemParams {
    int n = 0;    // storage nodes
    int k = 0;    // nodes contacted by the data collector
    int L = 0;    // clusters
    int n_I = 0;  // nodes per cluster, n / L
    int d_I = 0;  // intra-cluster helpers, n_I - 1
    int d_c = 0;  // cross-cluster helpers, n - n_I
};

// Validates and derives.  Rejections:
//   TooFewClustersError     L < 2
//   NonDivisibleError       L does not divide n
//   DegenerateClusterError  n_I < 2
//   KOutOfRangeError        k <= n_I or k > n
SystemParams validate_params(int n, int k, int L);

}  // namespace clustercap

#endif
