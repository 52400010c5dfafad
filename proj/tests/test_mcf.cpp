#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "gaptensor/errors.hpp"
#include "gaptensor/io.hpp"
#include "gaptensor/mcf.hpp"
#include "oracles.hpp"

using namespace gaptensor;

namespace {

CommodityGraph four_cycle() {
    CommodityGraph g;
    g.vertex_count = 4;
    g.edges = {{0, 1, Rational(1)},
               {1, 2, Rational(1)},
               {2, 3, Rational(1)},
               {3, 0, Rational(1)}};
    g.commodities = {{0, 2, Rational(1)}, {1, 3, Rational(1)}};
    return g;
}

CommodityGraph k23() {
    // K_{2,3}: both left vertices demand a unit to each other,
    // as do all three right pairs. The classic 3/4 instance.
    CommodityGraph g;
    g.vertex_count = 5;  // 0,1 left; 2,3,4 right
    g.edges = {{0, 2, Rational(1)}, {0, 3, Rational(1)}, {0, 4, Rational(1)},
               {1, 2, Rational(1)}, {1, 3, Rational(1)}, {1, 4, Rational(1)}};
    g.commodities = {{0, 1, Rational(1)},
                     {2, 3, Rational(1)},
                     {3, 4, Rational(1)},
                     {2, 4, Rational(1)}};
    return g;
}

// Exact feasibility audit of a flow at its claimed lambda.
void check_flow_feasible(const CommodityGraph& g, const FlowSolution& f) {
    REQUIRE(f.arc_flow.size() == g.commodities.size());
    for (std::size_t i = 0; i < g.commodities.size(); ++i) {
        REQUIRE(f.arc_flow[i].size() == 2 * g.edges.size());
        for (const Rational& x : f.arc_flow[i]) CHECK(x >= 0);
        const Commodity& c = g.commodities[i];
        CHECK(net_outflow(g, f, static_cast<int>(i), c.source) == f.lambda * c.demand);
        CHECK(net_outflow(g, f, static_cast<int>(i), c.sink) == -(f.lambda * c.demand));
        for (int v = 0; v < g.vertex_count; ++v) {
            if (v != c.source && v != c.sink) {
                CHECK(net_outflow(g, f, static_cast<int>(i), v) == 0);
            }
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Rational used = 0;
        for (std::size_t i = 0; i < g.commodities.size(); ++i) {
            used += f.arc_flow[i][2 * e] + f.arc_flow[i][2 * e + 1];
        }
        CHECK(used <= g.edges[e].capacity);
    }
}

}  // namespace

TEST_CASE("single edge routes capacity over demand") {
    CommodityGraph g;
    g.vertex_count = 2;
    g.edges = {{0, 1, Rational(1)}};
    g.commodities = {{0, 1, Rational(1)}};
    auto [flow, dual] = solve_primal_dual(g);
    CHECK(flow.lambda == Rational(1));
    CHECK(dual.objective == Rational(1));
    check_flow_feasible(g, flow);

    g.commodities[0].demand = Rational(1, 2);
    CHECK(max_concurrent_flow(g).lambda == Rational(2));
    g.edges[0].capacity = Rational(1, 4);
    g.commodities[0].demand = Rational(1);
    CHECK(max_concurrent_flow(g).lambda == Rational(1, 4));
}

TEST_CASE("4-cycle has lambda 1 with the quarter dual") {
    CommodityGraph g = four_cycle();
    auto [flow, dual] = solve_primal_dual(g);
    CHECK(flow.lambda == Rational(1));
    CHECK(dual.objective == Rational(1));
    check_flow_feasible(g, flow);
    DualCheck check = verify_dual(g, dual);
    CHECK(check.feasible);
    CHECK(check.objective == Rational(1));

    DistanceSummary ds = shortest_pair_distances(g, dual.weights);
    CHECK(ds.l_max == Rational(1, 2));
    CHECK(ds.w_min == *std::min_element(dual.weights.begin(), dual.weights.end()));
    CHECK(ds.distances[0] == Rational(1, 2));
    CHECK(ds.distances[1] == Rational(1, 2));

    // The uniform quarter dual is also optimal and keeps every weight positive.
    std::vector<Rational> quarter(4, Rational(1, 4));
    DistanceSummary qs = shortest_pair_distances(g, quarter);
    CHECK(qs.w_min == Rational(1, 4));
    CHECK(qs.l_max == Rational(1, 2));
}

TEST_CASE("K_{2,3} has lambda 3/4") {
    CommodityGraph g = k23();
    auto [flow, dual] = solve_primal_dual(g);
    CHECK(flow.lambda == Rational(3, 4));
    CHECK(dual.objective == Rational(3, 4));
    check_flow_feasible(g, flow);
    CHECK(verify_dual(g, dual).feasible);
}

TEST_CASE("two-path split instance") {
    // Two parallel 2-edge paths with different capacities.
    CommodityGraph g;
    g.vertex_count = 4;
    g.edges = {{0, 1, Rational(1, 2)},
               {1, 3, Rational(1, 2)},
               {0, 2, Rational(1, 4)},
               {2, 3, Rational(1)}};
    g.commodities = {{0, 3, Rational(1)}};
    auto [flow, dual] = solve_primal_dual(g);
    CHECK(flow.lambda == Rational(3, 4));
    CHECK(dual.objective == Rational(3, 4));
    check_flow_feasible(g, flow);
}

TEST_CASE("strong duality holds on random instances") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        CommodityGraph g = oracle::random_connected_graph(rng, 8, 12, 3);
        auto [flow, dual] = solve_primal_dual(g);
        CHECK(flow.lambda == dual.objective);
        CHECK(flow.lambda > 0);
        check_flow_feasible(g, flow);
        DualCheck check = verify_dual(g, dual);
        CHECK(check.feasible);
        CHECK(check.objective == dual.objective);
        CHECK(check.slack >= 0);
    }
}

TEST_CASE("weak duality against random feasible duals") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        CommodityGraph g = oracle::random_connected_graph(rng, 7, 10, 3);
        Rational lambda = max_concurrent_flow(g).lambda;
        for (int probe = 0; probe < 5; ++probe) {
            DualSolution d = oracle::random_feasible_dual(rng, g);
            DualCheck check = verify_dual(g, d);
            CHECK(check.feasible);
            CHECK(lambda <= check.objective);
        }
    }
}

TEST_CASE("shortest distances match the Floyd-Warshall oracle") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        CommodityGraph g = oracle::random_connected_graph(rng, 9, 14, 4);
        std::vector<Rational> w(g.edges.size());
        for (auto& x : w) x = oracle::random_rational(rng);
        DistanceSummary ds = shortest_pair_distances(g, w);
        auto ref = oracle::all_pairs_floyd(g, w);
        for (std::size_t i = 0; i < g.commodities.size(); ++i) {
            CHECK(ds.distances[i] == ref[g.commodities[i].source][g.commodities[i].sink]);
        }
    }
}

TEST_CASE("verify_dual reports infeasibility") {
    CommodityGraph g = four_cycle();
    DualSolution d;
    d.weights = {Rational(1, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)};
    d.objective = Rational(1, 2);
    DualCheck check = verify_dual(g, d);
    CHECK(!check.feasible);  // distances sum to 1/2 < 1
    CHECK(!check.violations.empty());

    DualSolution neg;
    neg.weights = {Rational(1), Rational(1), Rational(1), Rational(-1)};
    neg.objective = Rational(2);
    CHECK(!verify_dual(g, neg).feasible);
}

TEST_CASE("mcf rejects malformed inputs") {
    CommodityGraph empty;
    empty.vertex_count = 2;
    empty.edges = {{0, 1, Rational(1)}};
    CHECK_THROWS_AS(max_concurrent_flow(empty), ContractViolation);  // no commodities

    CommodityGraph unreachable;
    unreachable.vertex_count = 4;
    unreachable.edges = {{0, 1, Rational(1)}, {2, 3, Rational(1)}};
    unreachable.commodities = {{0, 3, Rational(1)}};
    CHECK_THROWS_AS(max_concurrent_flow(unreachable), ContractViolation);
}

TEST_CASE("flow file round trip preserves the solution") {
    CommodityGraph g = four_cycle();
    FlowSolution f = max_concurrent_flow(g);
    std::string text = serialize_flow(f, g);
    FlowSolution back = parse_flow(text, g);
    CHECK(back.lambda == f.lambda);
    CHECK(back.arc_flow == f.arc_flow);
    CHECK(serialize_flow(back, g) == text);
}

TEST_CASE("flow parser assigns parallel arcs to the first unassigned edge") {
    CommodityGraph g;
    g.vertex_count = 2;
    g.edges = {{0, 1, Rational(1)}, {0, 1, Rational(1)}};
    g.commodities = {{0, 1, Rational(2)}};
    std::string text = "lambda 1\nf 0 0 1 1\nf 0 0 1 1\n";
    FlowSolution f = parse_flow(text, g);
    CHECK(f.arc_flow[0][0] == Rational(1));  // first copy's forward arc
    CHECK(f.arc_flow[0][2] == Rational(1));  // second copy's forward arc
    check_flow_feasible(g, f);
}
