// Information flow graphs for clustered storage: the optimal graph G* whose
// min-cut equals the closed-form capacity, randomly simulated failure/repair
// histories, exact min-cut via max-flow, and a random-linear-network-coding
// rank check for achievability.

#ifndef CLUSTERCAP_FLOWGRAPH_HPP
#define CLUSTERCAP_FLOWGRAPH_HPP

#include <string>
#include <vector>

#include "clustercap/params.hpp"
#include "clustercap/rational.hpp"
#include "clustercap/resources.hpp"

namespace clustercap {

inline constexpr long long kDefaultUnitCap = 10'000;

// Directed acyclic capacitated graph.  Vertex ids: 0 is the source S, 1 is
// the data collector DC; storage node m (1-based) is split into an in-half
// 2m and an out-half 2m+1.
struct FlowGraph {
    struct Edge {
        int tail;
        int head;
        ExtRat cap;
    };

    // 1-based cluster/slot coordinates of each storage node.
    struct Position {
        int cluster;
        int slot;
    };

    int storage_nodes = 0;
    std::vector<Edge> edges;
    std::vector<Position> placement;  // placement[m-1] for storage node m

    // Copied system geometry, for dumps and unit checks.
    int n = 0;
    int k = 0;
    int L = 0;
    int n_I = 0;

    int vertex_count() const { return 2 * storage_nodes + 2; }
    static int source() { return 0; }
    static int collector() { return 1; }
    static int in_vertex(int m) { return 2 * m; }
    static int out_vertex(int m) { return 2 * m + 1; }
};

// The graph realizing the capacity exactly: k sequential failures at the
// positions prescribed by the cumulative g-vector, each repaired by a
// newcomer that pulls beta_I from same-cluster survivors and beta_c from the
// rest; the collector contacts the k newcomers.
FlowGraph build_gstar(const SystemParams& p, const ResourcePoint& r);

// A failure/repair history before the collector attaches: `live[pos]` is the
// storage-node index currently occupying position pos (0-based, row-major by
// cluster).
struct SimulatedHistory {
    FlowGraph graph;
    std::vector<int> live;
};

// Applies failure_count uniformly random single-node failures, repairing each
// before the next; deterministic for a given seed.
SimulatedHistory simulate_history(const SystemParams& p, const ResourcePoint& r,
                                  int failure_count, unsigned long long rng_seed);

// Attaches the collector to the current nodes at the k given positions.
FlowGraph attach_collector(const SimulatedHistory& h, const std::vector<int>& positions);

// simulate_history plus a uniformly random k-subset of positions for the
// collector, drawn from the same seeded stream.
FlowGraph simulate_graph(const SystemParams& p, const ResourcePoint& r, int failure_count,
                         unsigned long long rng_seed);

struct CutValue {
    ExtRat value;
    std::vector<bool> source_side;  // witness bipartition, indexed by vertex id
};

// Exact S-DC min-cut: rescales finite capacities to integers by their common
// denominator, replaces Infinite with a big-M above the finite total, runs
// max-flow, and self-checks the witness cut against the flow value.
CutValue min_cut(const FlowGraph& g);

// One edge per line "tail -> head capacity" (capacity `inf` for Infinite),
// preceded by a header naming S, DC, and every node's cluster/slot.
std::string dump_graph(const FlowGraph& g);

// Multiplies every finite capacity by the common denominator so that all
// capacities are integer unit counts; `scale` is that denominator.
struct ScaledGraph {
    FlowGraph graph;
    Int scale;
};
ScaledGraph scale_to_integer_units(const FlowGraph& g);

// Random linear network coding over GF(2^field_bits), field_bits 8 or 16:
// the source emits file_units independent symbols, every unit of finite edge
// capacity carries a fresh random combination of its tail's symbols, Infinite
// edges relay everything.  Returns the rank of the collector's matrix.
// Requires integer capacities (scale_to_integer_units first); throws
// ScalingOverflowError when the total finite units exceed unit_cap.
int rlnc_rank(const FlowGraph& g, int file_units, int field_bits, unsigned long long rng_seed,
              long long unit_cap = kDefaultUnitCap);

}  // namespace clustercap

#endif
