#include "clustercap/flowgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
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

// Seeded uniform integers via rejection sampling, so results are identical
// across standard library implementations.
class Rng {
  public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t residue = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= residue) {
                return r % bound;
            }
        }
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

void add_edge(FlowGraph& g, int tail, int head, ExtRat cap) {
    g.edges.push_back(FlowGraph::Edge{tail, head, std::move(cap)});
}

// Connects a newcomer (already placed in g.placement) to every current node
// listed in `helpers`: beta_I within its cluster, beta_c across.
void wire_newcomer(FlowGraph& g, const ResourcePoint& r, int newcomer,
                   const std::vector<int>& helpers) {
    const int cluster = g.placement[static_cast<size_t>(newcomer - 1)].cluster;
    int same = 0;
    for (int m : helpers) {
        const bool intra = g.placement[static_cast<size_t>(m - 1)].cluster == cluster;
        same += intra ? 1 : 0;
        add_edge(g, FlowGraph::out_vertex(m), FlowGraph::in_vertex(newcomer),
                 ExtRat::fin(intra ? r.beta_I : r.beta_c));
    }
    add_edge(g, FlowGraph::in_vertex(newcomer), FlowGraph::out_vertex(newcomer),
             ExtRat::fin(r.alpha));
    internal_check(same == g.n_I - 1, "newcomer must see n_I - 1 same-cluster helpers");
}

}  // namespace

FlowGraph build_gstar(const SystemParams& p, const ResourcePoint& r) {
    FlowGraph g;
    g.storage_nodes = p.n + p.k;
    g.n = p.n;
    g.k = p.k;
    g.L = p.L;
    g.n_I = p.n_I;
    g.placement.assign(static_cast<size_t>(g.storage_nodes), FlowGraph::Position{0, 0});

    // Failure t happens at slot i_t of cluster j_t, where i_t is the first
    // index whose cumulative g-count reaches t.
    const std::vector<int> gv = g_vector(p);
    std::vector<FlowGraph::Position> fail_pos(static_cast<size_t>(p.k) + 1);
    {
        int slot = 1;
        int covered = gv[0];
        int before = 0;
        for (int t = 1; t <= p.k; ++t) {
            while (covered < t) {
                before = covered;
                ++slot;
                covered += gv[static_cast<size_t>(slot - 1)];
            }
            fail_pos[static_cast<size_t>(t)] = FlowGraph::Position{t - before, slot};
        }
    }

    // Initial node x^t (t <= k) sits at the position that fails t-th; the
    // remaining initial nodes fill the leftover positions in (cluster, slot)
    // order.  Newcomer x^{n+t} takes the t-th failed position.
    std::vector<std::vector<bool>> taken(static_cast<size_t>(p.L) + 1,
                                         std::vector<bool>(static_cast<size_t>(p.n_I) + 1, false));
    for (int t = 1; t <= p.k; ++t) {
        const FlowGraph::Position pos = fail_pos[static_cast<size_t>(t)];
        internal_check(!taken[static_cast<size_t>(pos.cluster)][static_cast<size_t>(pos.slot)],
                       "failure positions must be distinct");
        taken[static_cast<size_t>(pos.cluster)][static_cast<size_t>(pos.slot)] = true;
        g.placement[static_cast<size_t>(t - 1)] = pos;
        g.placement[static_cast<size_t>(p.n + t - 1)] = pos;
    }
    {
        int next = p.k + 1;
        for (int c = 1; c <= p.L; ++c) {
            for (int s = 1; s <= p.n_I; ++s) {
                if (!taken[static_cast<size_t>(c)][static_cast<size_t>(s)]) {
                    g.placement[static_cast<size_t>(next - 1)] = FlowGraph::Position{c, s};
                    ++next;
                }
            }
        }
        internal_check(next == p.n + 1, "initial placement must cover all n positions");
    }

    // The initial nodes only relay: the source feeds their out-halves
    // directly, so their in-halves stay isolated.  Dropping their storage cap
    // does not change the min-cut because the collector never contacts them.
    for (int i = 1; i <= p.n; ++i) {
        add_edge(g, FlowGraph::source(), FlowGraph::out_vertex(i), ExtRat::inf());
    }
    for (int t = 1; t <= p.k; ++t) {
        std::vector<int> helpers;
        helpers.reserve(static_cast<size_t>(p.n) - 1);
        for (int m = t + 1; m <= p.n + t - 1; ++m) {
            helpers.push_back(m);
        }
        wire_newcomer(g, r, p.n + t, helpers);
    }
    for (int t = 1; t <= p.k; ++t) {
        add_edge(g, FlowGraph::out_vertex(p.n + t), FlowGraph::collector(), ExtRat::inf());
    }
    internal_check(static_cast<int>(g.edges.size()) == p.n + p.k * p.n + p.k,
                   "G* must have n + k*n + k edges");
    return g;
}

namespace {

SimulatedHistory simulate_history_impl(const SystemParams& p, const ResourcePoint& r,
                                       int failure_count, Rng& rng) {
    if (failure_count < 0) {
        throw std::invalid_argument("failure_count must be nonnegative");
    }
    SimulatedHistory h;
    FlowGraph& g = h.graph;
    g.storage_nodes = p.n + failure_count;
    g.n = p.n;
    g.k = p.k;
    g.L = p.L;
    g.n_I = p.n_I;
    g.placement.assign(static_cast<size_t>(g.storage_nodes), FlowGraph::Position{0, 0});

    // Row-major initial layout: position pos (0-based) is cluster pos/n_I + 1,
    // slot pos%n_I + 1, occupied by node pos+1.
    h.live.resize(static_cast<size_t>(p.n));
    for (int pos = 0; pos < p.n; ++pos) {
        h.live[static_cast<size_t>(pos)] = pos + 1;
        g.placement[static_cast<size_t>(pos)] =
            FlowGraph::Position{pos / p.n_I + 1, pos % p.n_I + 1};
        add_edge(g, FlowGraph::source(), FlowGraph::in_vertex(pos + 1), ExtRat::inf());
        add_edge(g, FlowGraph::in_vertex(pos + 1), FlowGraph::out_vertex(pos + 1),
                 ExtRat::fin(r.alpha));
    }

    for (int f = 1; f <= failure_count; ++f) {
        const int pos = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n)));
        const int newcomer = p.n + f;
        g.placement[static_cast<size_t>(newcomer - 1)] = g.placement[static_cast<size_t>(pos)];
        std::vector<int> helpers;
        helpers.reserve(static_cast<size_t>(p.n) - 1);
        for (int q = 0; q < p.n; ++q) {
            if (q != pos) {
                helpers.push_back(h.live[static_cast<size_t>(q)]);
            }
        }
        wire_newcomer(g, r, newcomer, helpers);
        h.live[static_cast<size_t>(pos)] = newcomer;
    }
    return h;
}

}  // namespace

SimulatedHistory simulate_history(const SystemParams& p, const ResourcePoint& r,
                                  int failure_count, unsigned long long rng_seed) {
    Rng rng(rng_seed);
    return simulate_history_impl(p, r, failure_count, rng);
}

FlowGraph attach_collector(const SimulatedHistory& h, const std::vector<int>& positions) {
    const int n = h.graph.n;
    const int k = h.graph.k;
    if (static_cast<int>(positions.size()) != k) {
        throw std::invalid_argument("collector must contact exactly k positions");
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    FlowGraph g = h.graph;
    for (int pos : positions) {
        if (pos < 0 || pos >= n || seen[static_cast<size_t>(pos)]) {
            throw std::invalid_argument("collector positions must be distinct and in [0, n)");
        }
        seen[static_cast<size_t>(pos)] = true;
        add_edge(g, FlowGraph::out_vertex(h.live[static_cast<size_t>(pos)]),
                 FlowGraph::collector(), ExtRat::inf());
    }
    return g;
}

FlowGraph simulate_graph(const SystemParams& p, const ResourcePoint& r, int failure_count,
                         unsigned long long rng_seed) {
    Rng rng(rng_seed);
    SimulatedHistory h = simulate_history_impl(p, r, failure_count, rng);
    // Partial Fisher-Yates over the position array; the first k entries are a
    // uniform k-subset.
    std::vector<int> order(static_cast<size_t>(p.n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < p.k; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n - i)));
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    }
    order.resize(static_cast<size_t>(p.k));
    return attach_collector(h, order);
}

namespace {

// Dinic max-flow on arbitrary-precision integer capacities.
class Dinic {
  public:
    explicit Dinic(int n) : adj_(static_cast<size_t>(n)), level_(n), iter_(n) {}

    void add(int u, int v, Int cap) {
        adj_[static_cast<size_t>(u)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back(E{v, std::move(cap)});
        adj_[static_cast<size_t>(v)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back(E{u, Int(0)});
    }

    Int max_flow(int s, int t) {
        Int flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            for (;;) {
                Int pushed = dfs(s, t, Int(-1));
                if (pushed == 0) {
                    break;
                }
                flow += pushed;
            }
        }
        return flow;
    }

    // After max_flow: vertices still reachable from s in the residual graph.
    std::vector<bool> reachable(int s) const {
        std::vector<bool> vis(adj_.size(), false);
        std::vector<int> stack{s};
        vis[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : adj_[static_cast<size_t>(u)]) {
                const E& e = edges_[static_cast<size_t>(id)];
                if (e.cap > 0 && !vis[static_cast<size_t>(e.to)]) {
                    vis[static_cast<size_t>(e.to)] = true;
                    stack.push_back(e.to);
                }
            }
        }
        return vis;
    }

  private:
    struct E {
        int to;
        Int cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{s};
        level_[static_cast<size_t>(s)] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int id : adj_[static_cast<size_t>(u)]) {
                const E& e = edges_[static_cast<size_t>(id)];
                if (e.cap > 0 && level_[static_cast<size_t>(e.to)] < 0) {
                    level_[static_cast<size_t>(e.to)] = level_[static_cast<size_t>(u)] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        return level_[static_cast<size_t>(t)] >= 0;
    }

    // limit < 0 means unbounded.
    Int dfs(int u, int t, Int limit) {
        if (u == t) {
            return limit;
        }
        for (int& i = iter_[static_cast<size_t>(u)];
             i < static_cast<int>(adj_[static_cast<size_t>(u)].size()); ++i) {
            const int id = adj_[static_cast<size_t>(u)][static_cast<size_t>(i)];
            E& e = edges_[static_cast<size_t>(id)];
            if (e.cap <= 0 || level_[static_cast<size_t>(e.to)] !=
                                  level_[static_cast<size_t>(u)] + 1) {
                continue;
            }
            Int next = (limit < 0 || e.cap < limit) ? e.cap : limit;
            Int pushed = dfs(e.to, t, next);
            if (pushed > 0) {
                e.cap -= pushed;
                edges_[static_cast<size_t>(id ^ 1)].cap += pushed;
                return pushed;
            }
        }
        return Int(0);
    }

    std::vector<std::vector<int>> adj_;
    std::vector<E> edges_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

Int common_denominator(const FlowGraph& g) {
    Int d = 1;
    for (const FlowGraph::Edge& e : g.edges) {
        if (!e.cap.infinite) {
            internal_check(e.cap.value >= 0, "edge capacities must be nonnegative");
            d = boost::multiprecision::lcm(d, den(e.cap.value));
        }
    }
    return d;
}

}  // namespace

CutValue min_cut(const FlowGraph& g) {
    const Int d = common_denominator(g);
    Int finite_total = 0;
    std::vector<Int> scaled(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (!g.edges[i].cap.infinite) {
            scaled[i] = num(g.edges[i].cap.value) * (d / den(g.edges[i].cap.value));
            finite_total += scaled[i];
        }
    }
    const Int big_m = finite_total + 1;

    Dinic dinic(g.vertex_count());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        dinic.add(g.edges[i].tail, g.edges[i].head,
                  g.edges[i].cap.infinite ? big_m : scaled[i]);
    }
    const Int flow = dinic.max_flow(FlowGraph::source(), FlowGraph::collector());

    CutValue cut;
    cut.source_side = dinic.reachable(FlowGraph::source());
    internal_check(cut.source_side[static_cast<size_t>(FlowGraph::source())],
                   "source must be on the source side");
    internal_check(!cut.source_side[static_cast<size_t>(FlowGraph::collector())],
                   "collector must not be reachable after max-flow");

    // Self-check: the witness bipartition's crossing capacity equals the flow.
    Int crossing = 0;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (cut.source_side[static_cast<size_t>(g.edges[i].tail)] &&
            !cut.source_side[static_cast<size_t>(g.edges[i].head)]) {
            crossing += g.edges[i].cap.infinite ? big_m : scaled[i];
        }
    }
    internal_check(crossing == flow, "witness cut value must equal the max-flow value");

    cut.value = (flow >= big_m) ? ExtRat::inf() : ExtRat::fin(Rat(flow, d));
    return cut;
}

namespace {

std::string vertex_name(int id) {
    if (id == FlowGraph::source()) {
        return "S";
    }
    if (id == FlowGraph::collector()) {
        return "DC";
    }
    const int m = id / 2;
    return "x" + std::to_string(m) + (id % 2 == 0 ? ".in" : ".out");
}

}  // namespace

std::string dump_graph(const FlowGraph& g) {
    std::ostringstream out;
    out << "# flow graph: n=" << g.n << " L=" << g.L << " n_I=" << g.n_I << " k=" << g.k
        << " storage_nodes=" << g.storage_nodes << "\n";
    out << "# S = source, DC = data collector\n";
    for (int m = 1; m <= g.storage_nodes; ++m) {
        const FlowGraph::Position& pos = g.placement[static_cast<size_t>(m - 1)];
        out << "# x" << m << " cluster=" << pos.cluster << " slot=" << pos.slot << "\n";
    }
    for (const FlowGraph::Edge& e : g.edges) {
        out << vertex_name(e.tail) << " -> " << vertex_name(e.head) << " "
            << ext_to_string(e.cap) << "\n";
    }
    return out.str();
}

ScaledGraph scale_to_integer_units(const FlowGraph& g) {
    ScaledGraph s;
    s.scale = common_denominator(g);
    s.graph = g;
    for (FlowGraph::Edge& e : s.graph.edges) {
        if (!e.cap.infinite) {
            e.cap.value *= s.scale;
        }
    }
    return s;
}

namespace {

// Log/antilog tables for GF(2^8) and GF(2^16) with their standard primitive
// polynomials; x = 2 generates the multiplicative group in both.
struct GfTable {
    int bits;
    std::uint32_t order;  // field size
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;

    explicit GfTable(int bits_in) : bits(bits_in), order(1u << bits_in) {
        const std::uint32_t poly = (bits == 8) ? 0x11Du : 0x1100Bu;
        exp.assign(2 * order, 0);
        log.assign(order, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order - 1; ++i) {
            internal_check(i == 0 || x != 1, "generator must have full multiplicative order");
            exp[i] = x;
            exp[i + order - 1] = x;
            log[x] = i;
            x <<= 1;
            if (x & order) {
                x ^= poly;
            }
        }
        internal_check(x == 1, "generator power must wrap to 1 at the group order");
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp[log[a] + log[b]];
    }

    std::uint32_t inv(std::uint32_t a) const { return exp[order - 1 - log[a]]; }
};

const GfTable& gf_table(int bits) {
    static const GfTable table8(8);
    static const GfTable table16(16);
    return bits == 8 ? table8 : table16;
}

// Deterministic topological order; throws if the graph has a cycle.
std::vector<int> topo_order(int vertex_count, const std::vector<FlowGraph::Edge>& edges) {
    std::vector<int> indegree(static_cast<size_t>(vertex_count), 0);
    for (const FlowGraph::Edge& e : edges) {
        ++indegree[static_cast<size_t>(e.head)];
    }
    std::vector<std::vector<int>> out(static_cast<size_t>(vertex_count));
    for (const FlowGraph::Edge& e : edges) {
        out[static_cast<size_t>(e.tail)].push_back(e.head);
    }
    std::vector<int> order;
    order.reserve(static_cast<size_t>(vertex_count));
    std::vector<int> ready;
    for (int v = vertex_count - 1; v >= 0; --v) {
        if (indegree[static_cast<size_t>(v)] == 0) {
            ready.push_back(v);
        }
    }
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : out[static_cast<size_t>(v)]) {
            if (--indegree[static_cast<size_t>(w)] == 0) {
                ready.push_back(w);
            }
        }
    }
    if (static_cast<int>(order.size()) != vertex_count) {
        throw std::logic_error("flow graph must be acyclic");
    }
    return order;
}

// Rank of the row set over GF(2^bits) by Gaussian elimination.
int gf_rank(std::vector<std::vector<std::uint32_t>> rows, const GfTable& gf, int cols) {
    int rank = 0;
    std::vector<int> pivot_col;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::vector<std::uint32_t>& row : rows) {
        for (size_t b = 0; b < basis.size(); ++b) {
            const std::uint32_t coef = row[static_cast<size_t>(pivot_col[b])];
            if (coef != 0) {
                const std::uint32_t factor = gf.mul(coef, gf.inv(basis[b][static_cast<size_t>(
                                                              pivot_col[b])]));
                for (int c = 0; c < cols; ++c) {
                    row[static_cast<size_t>(c)] ^=
                        gf.mul(factor, basis[b][static_cast<size_t>(c)]);
                }
            }
        }
        int lead = -1;
        for (int c = 0; c < cols; ++c) {
            if (row[static_cast<size_t>(c)] != 0) {
                lead = c;
                break;
            }
        }
        if (lead >= 0) {
            pivot_col.push_back(lead);
            basis.push_back(std::move(row));
            ++rank;
        }
    }
    return rank;
}

}  // namespace

int rlnc_rank(const FlowGraph& g, int file_units, int field_bits, unsigned long long rng_seed,
              long long unit_cap) {
    if (field_bits != 8 && field_bits != 16) {
        throw std::invalid_argument("field_bits must be 8 or 16");
    }
    if (file_units < 0) {
        throw std::invalid_argument("file_units must be nonnegative");
    }
    Int total_units = 0;
    for (const FlowGraph::Edge& e : g.edges) {
        if (!e.cap.infinite) {
            if (den(e.cap.value) != 1 || e.cap.value < 0) {
                throw std::invalid_argument(
                    "capacities must be nonnegative integers; scale_to_integer_units first");
            }
            total_units += num(e.cap.value);
        }
    }
    if (total_units > unit_cap) {
        throw ScalingOverflowError("total finite capacity units exceed the coding bound");
    }

    const GfTable& gf = gf_table(field_bits);
    Rng rng(rng_seed);
    const std::uint32_t coef_mask = gf.order - 1;

    // symbols[v]: coefficient vectors (w.r.t. the source basis) available at v.
    std::vector<std::vector<std::vector<std::uint32_t>>> symbols(
        static_cast<size_t>(g.vertex_count()));
    symbols[static_cast<size_t>(FlowGraph::source())].resize(static_cast<size_t>(file_units));
    for (int u = 0; u < file_units; ++u) {
        auto& basis_row = symbols[static_cast<size_t>(FlowGraph::source())][static_cast<size_t>(u)];
        basis_row.assign(static_cast<size_t>(file_units), 0);
        basis_row[static_cast<size_t>(u)] = 1;
    }

    std::vector<std::vector<int>> out_edges(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < g.edges.size(); ++i) {
        out_edges[static_cast<size_t>(g.edges[i].tail)].push_back(static_cast<int>(i));
    }

    for (int v : topo_order(g.vertex_count(), g.edges)) {
        const auto& have = symbols[static_cast<size_t>(v)];
        for (int ei : out_edges[static_cast<size_t>(v)]) {
            const FlowGraph::Edge& e = g.edges[static_cast<size_t>(ei)];
            auto& sink = symbols[static_cast<size_t>(e.head)];
            if (e.cap.infinite) {
                sink.insert(sink.end(), have.begin(), have.end());
                continue;
            }
            const long long units = num(e.cap.value).convert_to<long long>();
            for (long long u = 0; u < units; ++u) {
                if (have.empty()) {
                    continue;
                }
                std::vector<std::uint32_t> combo(static_cast<size_t>(file_units), 0);
                for (const auto& src : have) {
                    const std::uint32_t coef =
                        static_cast<std::uint32_t>(rng.raw()) & coef_mask;
                    if (coef == 0) {
                        continue;
                    }
                    for (int c = 0; c < file_units; ++c) {
                        combo[static_cast<size_t>(c)] ^=
                            gf.mul(coef, src[static_cast<size_t>(c)]);
                    }
                }
                sink.push_back(std::move(combo));
            }
        }
    }
    return gf_rank(std::move(symbols[static_cast<size_t>(FlowGraph::collector())]), gf,
                   file_units);
}

}  // namespace clustercap
