#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "clustercap/capacity.hpp"
#include "clustercap/errors.hpp"
#include "clustercap/flowgraph.hpp"

using namespace clustercap;

namespace {

FlowGraph tiny_two_path(const Rat& c1, const Rat& c2) {
    FlowGraph g;
    g.storage_nodes = 2;
    g.n = 2;
    g.k = 2;
    g.L = 2;
    g.n_I = 1;
    g.placement = {{1, 1}, {2, 1}};
    auto push = [&](int t, int h, ExtRat c) { g.edges.push_back({t, h, std::move(c)}); };
    for (int m = 1; m <= 2; ++m) {
        push(FlowGraph::source(), FlowGraph::in_vertex(m), ExtRat::inf());
        push(FlowGraph::in_vertex(m), FlowGraph::out_vertex(m),
             ExtRat::fin(m == 1 ? c1 : c2));
        push(FlowGraph::out_vertex(m), FlowGraph::collector(), ExtRat::inf());
    }
    return g;
}

}  // namespace

TEST_CASE("gstar has the expected shape") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(10), Rat(5), Rat(0));
    FlowGraph g = build_gstar(p, r);
    CHECK(g.vertex_count() == 2 * (6 + 5) + 2);
    CHECK(g.edges.size() == 6u + 5u * 6u + 5u);

    int from_source = 0, into_collector = 0;
    for (const auto& e : g.edges) {
        CHECK(e.tail != FlowGraph::collector());  // DC has only incoming edges
        CHECK(e.head != FlowGraph::source());     // S has only outgoing edges
        if (e.tail == FlowGraph::source()) {
            ++from_source;
            CHECK(e.cap.infinite);
        }
        if (e.head == FlowGraph::collector()) {
            ++into_collector;
            CHECK(e.cap.infinite);
        }
    }
    CHECK(from_source == 6);
    CHECK(into_collector == 5);

    // Every newcomer stores alpha between its halves.
    for (int t = 1; t <= 5; ++t) {
        const int m = 6 + t;
        bool found = false;
        for (const auto& e : g.edges) {
            if (e.tail == FlowGraph::in_vertex(m) && e.head == FlowGraph::out_vertex(m)) {
                found = true;
                CHECK(e.cap == ExtRat::fin(Rat(10)));
            }
        }
        CHECK(found);
    }
}

TEST_CASE("gstar places newcomers by the cumulative g-vector") {
    SystemParams p = validate_params(12, 9, 3);
    ResourcePoint r = make_resources(p, Rat(1), Rat(1), Rat(0));
    FlowGraph g = build_gstar(p, r);
    std::vector<int> clusters, slots;
    for (int t = 1; t <= 9; ++t) {
        clusters.push_back(g.placement[static_cast<size_t>(12 + t - 1)].cluster);
        slots.push_back(g.placement[static_cast<size_t>(12 + t - 1)].slot);
    }
    CHECK(clusters == std::vector<int>{1, 2, 3, 1, 2, 1, 2, 1, 2});
    CHECK(slots == std::vector<int>{1, 1, 1, 2, 2, 3, 3, 4, 4});
    // Newcomer t replaces initial node t at the same coordinates.
    for (int t = 1; t <= 9; ++t) {
        CHECK(g.placement[static_cast<size_t>(t - 1)].cluster ==
              g.placement[static_cast<size_t>(12 + t - 1)].cluster);
        CHECK(g.placement[static_cast<size_t>(t - 1)].slot ==
              g.placement[static_cast<size_t>(12 + t - 1)].slot);
    }
}

TEST_CASE("min_cut on hand-built graphs") {
    CutValue two = min_cut(tiny_two_path(Rat(3, 2), Rat(5, 3)));
    CHECK(two.value == ExtRat::fin(Rat(19, 6)));

    // A fully infinite path makes the cut infinite.
    FlowGraph g = tiny_two_path(Rat(1), Rat(1));
    g.edges[1].cap = ExtRat::inf();
    CHECK(min_cut(g).value.infinite);
}

TEST_CASE("min_cut witness separates source from collector") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(10), Rat(5), Rat(0));
    CutValue cut = min_cut(build_gstar(p, r));
    CHECK(cut.value == ExtRat::fin(Rat(30)));
    REQUIRE(cut.source_side.size() == 24u);
    CHECK(cut.source_side[FlowGraph::source()]);
    CHECK_FALSE(cut.source_side[FlowGraph::collector()]);
}

TEST_CASE("gstar min-cut equals the closed-form capacity") {
    struct Case {
        int n, k, L;
        Rat alpha, bI, bc;
    };
    const std::vector<Case> cases = {
        {6, 5, 2, Rat(10), Rat(5), Rat(0)},
        {6, 5, 2, Rat(10), Rat(2), Rat(2)},
        {4, 3, 2, Rat(1), Rat(1, 2), Rat(1, 4)},
        {9, 5, 3, Rat(1), Rat(1, 3), Rat(1, 6)},
        {12, 9, 3, Rat(2), Rat(1), Rat(1, 3)},
        {8, 6, 4, Rat(3, 2), Rat(1, 2), Rat(1, 8)},
        {10, 7, 5, Rat(5, 7), Rat(2, 5), Rat(2, 5)},
    };
    for (const Case& c : cases) {
        SystemParams p = validate_params(c.n, c.k, c.L);
        ResourcePoint r = make_resources(p, c.alpha, c.bI, c.bc);
        CutValue cut = min_cut(build_gstar(p, r));
        CHECK(cut.value == ExtRat::fin(capacity(p, r).total));
    }
}

TEST_CASE("removing a contacted node's storage lowers the cut by that term") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(10), Rat(5), Rat(0));
    FlowGraph g = build_gstar(p, r);
    for (auto& e : g.edges) {
        if (e.tail == FlowGraph::in_vertex(7) && e.head == FlowGraph::out_vertex(7)) {
            e.cap = ExtRat::fin(Rat(0));  // first newcomer loses its storage
        }
    }
    // The first term of the capacity sum was min{10, omega_1} = 10; removing
    // at most 10 units of capacity cannot cost more than 10, and the old
    // optimal cut with this edge zeroed still cuts the graph.
    CHECK(min_cut(g).value == ExtRat::fin(Rat(20)));
}

TEST_CASE("simulation with no failures cuts at the contacted storage") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(10), Rat(5), Rat(0));
    FlowGraph g = simulate_graph(p, r, 0, 123);
    CutValue cut = min_cut(g);
    CHECK(cut.value == ExtRat::fin(Rat(50)));  // k * alpha
    CHECK(ExtRat::fin(capacity(p, r).total) == ExtRat::fin(Rat(30)));
    CHECK_FALSE(ext_less(cut.value, ExtRat::fin(capacity(p, r).total)));
}

TEST_CASE("simulation is deterministic for a fixed seed") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(4), Rat(2), Rat(1));
    CHECK(dump_graph(simulate_graph(p, r, 12, 99)) == dump_graph(simulate_graph(p, r, 12, 99)));
}

TEST_CASE("seeded simulation regression value") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(10), Rat(5), Rat(0));
    CutValue cut = min_cut(simulate_graph(p, r, 20, 7));
    CHECK(cut.value == ExtRat::fin(Rat(30)));
}

TEST_CASE("simulated histories never cut below capacity") {
    for (auto [n, k, L] : {std::tuple{6, 5, 2}, {8, 5, 4}, {9, 7, 3}}) {
        SystemParams p = validate_params(n, k, L);
        for (const auto& [bI, bc] : {std::pair{Rat(3), Rat(1)}, {Rat(1), Rat(1)}}) {
            ResourcePoint r = make_resources(p, Rat(5), bI, bc);
            const Rat cap = capacity(p, r).total;
            for (int failures : {0, 3, 17}) {
                for (unsigned long long seed = 1; seed <= 5; ++seed) {
                    CutValue cut = min_cut(simulate_graph(p, r, failures, seed));
                    CHECK_FALSE(ext_less(cut.value, ExtRat::fin(cap)));
                }
            }
        }
    }
}

TEST_CASE("every collector choice stays above capacity on small systems") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(10), Rat(5), Rat(0));
    const Rat cap = capacity(p, r).total;
    SimulatedHistory h = simulate_history(p, r, 9, 4242);
    // C(6,5) = 6 collector choices; try them all.
    for (int skip = 0; skip < 6; ++skip) {
        std::vector<int> positions;
        for (int pos = 0; pos < 6; ++pos) {
            if (pos != skip) {
                positions.push_back(pos);
            }
        }
        CutValue cut = min_cut(attach_collector(h, positions));
        CHECK_FALSE(ext_less(cut.value, ExtRat::fin(cap)));
    }
}

TEST_CASE("attach_collector validates its positions") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(1), Rat(1), Rat(0));
    SimulatedHistory h = simulate_history(p, r, 2, 1);
    CHECK_THROWS_AS(attach_collector(h, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(attach_collector(h, {0, 1, 2, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(attach_collector(h, {0, 1, 2, 3, 6}), std::invalid_argument);
}

TEST_CASE("dump lists placements and edges in a stable format") {
    SystemParams p = validate_params(4, 3, 2);
    ResourcePoint r = make_resources(p, Rat(1), Rat(1, 2), Rat(0));
    std::string dump = dump_graph(build_gstar(p, r));
    CHECK(dump.find("# flow graph: n=4 L=2 n_I=2 k=3") != std::string::npos);
    CHECK(dump.find("# x1 cluster=1 slot=1") != std::string::npos);
    CHECK(dump.find("S -> x1.out inf") != std::string::npos);
    CHECK(dump.find("-> DC inf") != std::string::npos);
    CHECK(dump.find("1/2") != std::string::npos);
}

TEST_CASE("scaling to integer units multiplies the cut by the denominator") {
    SystemParams p = validate_params(9, 5, 3);
    ResourcePoint r = make_resources(p, Rat(1), Rat(1, 3), Rat(1, 6));
    FlowGraph g = build_gstar(p, r);
    ScaledGraph s = scale_to_integer_units(g);
    CHECK(s.scale == 6);
    for (const auto& e : s.graph.edges) {
        if (!e.cap.infinite) {
            CHECK(den(e.cap.value) == 1);
        }
    }
    CutValue before = min_cut(g);
    CutValue after = min_cut(s.graph);
    CHECK(after.value == ExtRat::fin(before.value.value * Rat(s.scale)));
}

TEST_CASE("rlnc achieves the min-cut with high probability") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(4), Rat(2), Rat(1));
    FlowGraph g = build_gstar(p, r);
    CutValue cut = min_cut(g);
    REQUIRE(cut.value == ExtRat::fin(Rat(16)));
    const int units = 16;
    int successes = 0;
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
        if (rlnc_rank(g, units, 16, seed) == units) {
            ++successes;
        }
    }
    CHECK(successes >= 9);
}

TEST_CASE("rlnc rank never exceeds the min-cut") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint r = make_resources(p, Rat(4), Rat(2), Rat(1));
    FlowGraph g = build_gstar(p, r);
    for (unsigned long long seed = 1; seed <= 5; ++seed) {
        CHECK(rlnc_rank(g, 25, 16, seed) <= 16);  // file larger than the cut
        CHECK(rlnc_rank(g, 25, 8, seed) <= 16);
    }
    CHECK(rlnc_rank(g, 0, 16, 1) == 0);
}

TEST_CASE("rlnc validates its inputs") {
    SystemParams p = validate_params(6, 5, 2);
    ResourcePoint fractional = make_resources(p, Rat(1), Rat(1, 2), Rat(1, 4));
    FlowGraph g = build_gstar(p, fractional);
    CHECK_THROWS_AS(rlnc_rank(g, 4, 16, 1), std::invalid_argument);  // non-integer caps
    ResourcePoint integral = make_resources(p, Rat(4), Rat(2), Rat(1));
    FlowGraph h = build_gstar(p, integral);
    CHECK_THROWS_AS(rlnc_rank(h, 4, 12, 1), std::invalid_argument);  // bad field
    CHECK_THROWS_AS(rlnc_rank(h, 4, 16, 1, 10), ScalingOverflowError);  // unit cap
}
