// Acceptance gate: eight scripted end-to-end checks, one PASS/FAIL line each.
// Runs without doctest so the output stays one line per criterion; the exit
// status is 0 only when every criterion passes inside its time budget.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gaptensor/amplify.hpp"
#include "gaptensor/cbg.hpp"
#include "gaptensor/errors.hpp"
#include "gaptensor/graph.hpp"
#include "gaptensor/mcf.hpp"
#include "gaptensor/netcode.hpp"
#include "gaptensor/sparsity.hpp"
#include "gaptensor/standard_form.hpp"
#include "gaptensor/tensor.hpp"
#include "oracles.hpp"

using namespace gaptensor;

namespace {

// Collects expectations; only the first failure is reported per criterion.
struct Checker {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

// --- fixtures shared with the unit tests ---

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

CommodityGraph single_edge() {
    CommodityGraph g;
    g.vertex_count = 2;
    g.edges = {{0, 1, Rational(1)}};
    g.commodities = {{0, 1, Rational(1)}};
    return g;
}

CommodityGraph k23() {
    CommodityGraph g;
    g.vertex_count = 5;
    g.edges = {{0, 2, Rational(1)}, {0, 3, Rational(1)}, {0, 4, Rational(1)},
               {1, 2, Rational(1)}, {1, 3, Rational(1)}, {1, 4, Rational(1)}};
    g.commodities = {{0, 1, Rational(1)},
                     {2, 3, Rational(1)},
                     {3, 4, Rational(1)},
                     {2, 4, Rational(1)}};
    return g;
}

CommodityGraph butterfly() {
    CommodityGraph g;
    g.vertex_count = 6;
    g.edges = {{0, 2, Rational(1)}, {1, 2, Rational(1)}, {2, 3, Rational(1)},
               {3, 4, Rational(1)}, {3, 5, Rational(1)}, {0, 5, Rational(1)},
               {1, 4, Rational(1)}};
    g.commodities = {{0, 4, Rational(1)}, {1, 5, Rational(1)}};
    return g;
}

NCSolution butterfly_xor() {
    NCSolution n;
    n.message_sizes = {2, 2};
    std::vector<int> bit0 = {0, 1, 0, 1};
    std::vector<int> bit1 = {0, 0, 1, 1};
    std::vector<int> xor01 = {0, 1, 1, 0};
    std::vector<int> none = {0, 0, 0, 0};
    std::vector<std::vector<int>> fwd = {bit0, bit1, xor01, xor01, xor01, bit0, bit1};
    for (const auto& table : fwd) {
        n.arc_alphabets.push_back(2);
        n.coding_tables.push_back(table);
        n.arc_alphabets.push_back(1);
        n.coding_tables.push_back(none);
    }
    return n;
}

FlowSolution half_rate_single_path_flow() {
    FlowSolution f;
    f.lambda = Rational(1, 2);
    f.arc_flow.assign(2, std::vector<Rational>(8, Rational(0)));
    f.arc_flow[0][0] = Rational(1, 2);
    f.arc_flow[0][2] = Rational(1, 2);
    f.arc_flow[1][1] = Rational(1, 2);
    f.arc_flow[1][7] = Rational(1, 2);
    return f;
}

OrientedGraph forward_all(const CommodityGraph& g) {
    std::vector<std::pair<Rational, Rational>> caps(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        caps[e] = {g.edges[e].capacity, Rational(0)};
    }
    return orient_by_coding(g, caps);
}

ColoredBipartite single_scaffold() {
    ColoredBipartite b;
    b.n1 = 1;
    b.n2 = 2;
    b.d1 = 2;
    b.d2 = 1;
    b.q1 = 2;
    b.q2 = 1;
    b.declared_girth = Girth::infinite();
    b.edges = {{0, 0, 0, 0}, {0, 1, 1, 0}};
    return b;
}

ColoredBipartite two_by_two_scaffold() {
    ColoredBipartite b;
    b.n1 = 2;
    b.n2 = 2;
    b.d1 = 2;
    b.d2 = 2;
    b.q1 = 2;
    b.q2 = 2;
    b.declared_girth = Girth::of(4);
    b.edges = {{0, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 1, 1}};
    return b;
}

ColoredBipartite low_girth_scaffold() {
    ColoredBipartite b;
    b.n1 = 2;
    b.n2 = 8;
    b.d1 = 8;
    b.d2 = 2;
    b.q1 = 8;
    b.q2 = 2;
    b.declared_girth = Girth::of(4);
    for (int j = 0; j < 8; ++j) {
        b.edges.push_back({0, j, j, 0});
        b.edges.push_back({1, j, j, 1});
    }
    return b;
}

DualSolution quarter_dual() {
    DualSolution d;
    d.weights.assign(4, Rational(1, 4));
    d.objective = Rational(1);
    return d;
}

std::vector<std::pair<int, int>> offset_edges(int n1,
                                              const std::vector<ColoredEdge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const ColoredEdge& e : edges) out.push_back({e.left, n1 + e.right});
    return out;
}

// --- criterion 1: exact LP duality plus weak-duality domination ---

void criterion1(Checker& c) {
    std::mt19937 rng(20260816u);
    for (int trial = 0; trial < 50; ++trial) {
        CommodityGraph g = oracle::random_connected_graph(rng, 10, 15, 4);
        auto [flow, dual] = solve_primal_dual(g);
        DualCheck chk = verify_dual(g, dual);
        c.expect(flow.lambda > 0, "connected instance solved to lambda 0");
        c.expect(chk.feasible, "optimal dual came back infeasible");
        c.expect(dual.objective == flow.lambda, "strong duality gap on a random instance");
        c.expect(chk.objective == flow.lambda, "recomputed dual objective drifted");
        for (int probe = 0; probe < 2; ++probe) {
            DualSolution rd = oracle::random_feasible_dual(rng, g);
            DualCheck rchk = verify_dual(g, rd);
            c.expect(rchk.feasible, "probe dual not feasible");
            c.expect(rchk.objective >= flow.lambda, "a feasible dual fell below lambda");
        }
        if (!c.ok) return;
    }
}

// --- criterion 2: the (3,2) colored biregular construction ---

void criterion2(Checker& c) {
    ColoredBipartite b = construct_cbg(3, 2, 2);
    c.expect(b.n1 == 12 && b.n2 == 18, "part sizes are not 12 and 18");
    c.expect(b.d1 == 3 && b.d2 == 2, "declared degrees are not (3,2)");
    c.expect(b.q1 == 3 && b.q2 == 2, "color ranges are not [3]x[2]");
    c.expect(static_cast<int>(b.edges.size()) == 36, "edge count is not 36");

    std::vector<std::vector<int>> left_a(b.n1), left_b(b.n1);
    std::vector<std::vector<int>> right_a(b.n2), right_b(b.n2);
    for (const ColoredEdge& e : b.edges) {
        left_a[e.left].push_back(e.a);
        left_b[e.left].push_back(e.b);
        right_a[e.right].push_back(e.a);
        right_b[e.right].push_back(e.b);
    }
    for (int x = 0; x < b.n1; ++x) {
        std::sort(left_a[x].begin(), left_a[x].end());
        c.expect(left_a[x] == std::vector<int>{0, 1, 2},
                 "a left vertex misses an a-color");
        for (int col : left_b[x]) {
            c.expect(col == left_b[x][0], "a left vertex mixes b-colors");
        }
    }
    for (int y = 0; y < b.n2; ++y) {
        std::sort(right_b[y].begin(), right_b[y].end());
        c.expect(right_b[y] == std::vector<int>{0, 1},
                 "a right vertex misses a b-color");
        for (int col : right_a[y]) {
            c.expect(col == right_a[y][0], "a right vertex mixes a-colors");
        }
    }

    Girth gl = cbg_girth(b);
    c.expect(gl >= Girth::of(4), "girth fell below 4");
    c.expect(gl == oracle::girth_by_deletion(b.n1 + b.n2, offset_edges(b.n1, b.edges)),
             "girth disagrees with the deletion oracle");
    c.expect(verify_colored(b, 3, 2).empty(), "membership checker found violations");
}

// --- criterion 3: color lifts never lower girth and reach 2g ---

void criterion3(Checker& c) {
    for (int r = 1; r <= 3; ++r) {
        for (int s = 1; s <= 3; ++s) {
            for (int g = 3; g <= 4; ++g) {
                BipartiteGraph base = biregular_high_girth(r, s, g);
                ColoredBipartite lifted = color_lift(base, r, s);
                Girth gb = bipartite_girth(base);
                Girth gl = cbg_girth(lifted);
                std::string tag = " (r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                  " g=" + std::to_string(g) + ")";
                c.expect(gl >= gb, "lift lowered the girth" + tag);
                c.expect(gl >= Girth::of(2 * g), "lift missed the 2g bound" + tag);

                std::vector<std::pair<int, int>> be;
                be.reserve(base.edges.size());
                for (const auto& e : base.edges) be.push_back({e.first, base.n1 + e.second});
                if (base.n1 + base.n2 <= 200) {
                    c.expect(gb == oracle::girth_by_deletion(base.n1 + base.n2, be),
                             "base girth disagrees with the oracle" + tag);
                }
                if (lifted.n1 + lifted.n2 <= 200) {
                    c.expect(gl == oracle::girth_by_deletion(
                                       lifted.n1 + lifted.n2,
                                       offset_edges(lifted.n1, lifted.edges)),
                             "lifted girth disagrees with the oracle" + tag);
                }
                if (!c.ok) return;
            }
        }
    }
}

// --- criterion 4: certified tensor duals rule cheating out exactly ---

void criterion4(Checker& c) {
    CommodityGraph fc = four_cycle();
    DualSolution d = quarter_dual();
    DistanceSummary ds = shortest_pair_distances(fc, d.weights);
    long long greq = girth_requirement(ds, ds);
    c.expect(greq == 4, "unexpected girth requirement for the 4-cycle pair");

    OrientedGraph h = orient_half(fc);
    Rational want = ds.l_max * ds.l_max;  // 1/4

    // Scaffold built to order: every pair distance must equal l1*l2.
    ColoredBipartite good = construct_cbg(8, 2, greq);
    TensorResult t = graph_tensor(h, h, good);
    TensorDualResult td = tensor_dual(fc, fc, d, d, t);
    c.expect(td.certified, "construct_cbg scaffold was not certified");
    c.expect(td.scaffold_girth >= Girth::of(2 * greq), "scaffold girth is short");
    c.expect(td.dual.objective == t.cert.q * d.objective * d.objective,
             "tensor dual objective is not q*z1*z2");
    c.expect(td.z_product == td.dual.objective, "certificate z_product mismatch");
    DistanceSummary dst = shortest_pair_distances(t.graph, td.dual.weights);
    c.expect(dst.distances.size() == t.graph.commodities.size() && !dst.distances.empty(),
             "certified tensor lost commodities");
    for (const Rational& dist : dst.distances) {
        c.expect(dist == want, "a certified pair distance moved off l1*l2");
        if (!c.ok) break;
    }

    // Low-girth scaffold: some pair must come out strictly cheaper.
    TensorResult t2 = graph_tensor(h, h, low_girth_scaffold());
    TensorDualResult td2 = tensor_dual(fc, fc, d, d, t2);
    c.expect(!td2.certified, "low-girth scaffold was wrongly certified");
    DistanceSummary dst2 = shortest_pair_distances(t2.graph, td2.dual.weights);
    c.expect(!dst2.distances.empty(), "low-girth tensor lost commodities");
    if (dst2.distances.empty()) return;
    Rational min_dist = dst2.distances.front();
    for (const Rational& dist : dst2.distances) min_dist = std::min(min_dist, dist);
    c.expect(min_dist < want, "no cheating pair under the low-girth scaffold");
}

// --- criterion 5: standardization transforms are exact ---

void criterion5(Checker& c) {
    // Alpha extension multiplies the dual objective by exactly 1+alpha.
    {
        CommodityGraph fc = four_cycle();
        DualSolution d = quarter_dual();
        Rational eps(1);
        Rational alpha = (Rational(1) + eps) / (Rational(1) + eps / Rational(2)) - Rational(1);
        auto [ge, de] = alpha_extension(fc, d, eps, alpha);
        c.expect(de.objective == d.objective * (Rational(1) + alpha),
                 "alpha extension moved the objective off z*(1+alpha)");
        DualCheck chk = verify_dual(ge, de);
        c.expect(chk.feasible, "alpha-extended dual is infeasible");
        c.expect(chk.objective == de.objective, "alpha-extended objective drifted");
        c.expect(is_standard_form(ge, de).standard, "extended 4-cycle pair not standard");
    }
    {
        CommodityGraph g = k23();
        DualSolution d = optimal_dual(g);
        Rational eps(1);
        Rational alpha = (Rational(1) + eps) / (Rational(1) + eps / Rational(2)) - Rational(1);
        auto [ge, de] = alpha_extension(g, d, eps, alpha);
        c.expect(de.objective == d.objective * (Rational(1) + alpha),
                 "alpha extension drifted on the K_{2,3} instance");
        c.expect(verify_dual(ge, de).feasible, "extended K_{2,3} dual infeasible");
    }

    // Contraction drops zero-weight edges without touching the objective.
    {
        CommodityGraph p;
        p.vertex_count = 4;
        p.edges = {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 3, Rational(1)}};
        p.commodities = {{0, 3, Rational(1)}, {0, 1, Rational(5)}};
        DualSolution pd;
        pd.weights = {Rational(0), Rational(1), Rational(0)};
        pd.objective = Rational(1);
        auto [cg, cd] = contract_zero_weight(p, pd);
        c.expect(cd.objective == pd.objective, "contraction changed the objective");
        c.expect(cg.vertex_count == 2 && cg.edges.size() == 1 && cg.commodities.size() == 1,
                 "contraction produced the wrong shape");
        DualCheck chk = verify_dual(cg, cd);
        c.expect(chk.feasible, "contracted dual is infeasible");
        c.expect(chk.objective == pd.objective, "contracted objective recomputes wrong");
    }

    // A tensor of standard inputs is standard again.
    {
        CommodityGraph g = single_edge();
        DualSolution d;
        d.weights = {Rational(1)};
        d.objective = Rational(1);
        c.expect(is_standard_form(g, d).standard, "single-edge input pair not standard");
        auto [tg, tdual, cert] = amplify_once(g, d, Rational(0));
        c.expect(cert.z_out == cert.tensor.q * d.objective * d.objective,
                 "amplified objective is not q*z^2");
        c.expect(is_standard_form(tg, tdual).standard, "tensor output lost standard form");
    }
}

// --- criterion 6: codes verify, routings emulate, compositions multiply ---

void criterion6(Checker& c) {
    // Butterfly XOR runs at rate 1.
    {
        NCReport r = verify_nc(forward_all(butterfly()), butterfly_xor());
        c.expect(r.valid, "butterfly XOR code rejected");
        c.expect(r.rate == Rational(1) && r.rate_exact, "butterfly rate is not exactly 1");
    }

    // Routing emulations verify at rate lambda, fixed and random.
    auto check_routing = [&c](const CommodityGraph& g, long long precision,
                              const std::string& tag) {
        FlowSolution f = max_concurrent_flow(g);
        try {
            RoutingNcResult r = routing_as_nc(g, f, precision);
            NCReport rep = verify_nc(orient_by_coding(g, r.used_arc_caps), r.nc);
            c.expect(rep.valid, "routing emulation rejected on " + tag);
            c.expect(rep.rate == f.lambda, "routing rate is not lambda on " + tag);
            c.expect(rep.rate_exact, "routing rate not certified exact on " + tag);
        } catch (const Refusal&) {
            // Oversized fragment spaces are allowed to refuse, never to fail.
        }
    };
    check_routing(single_edge(), 1, "the single edge");
    check_routing(four_cycle(), 2, "the 4-cycle");
    check_routing(k23(), 1, "K_{2,3}");
    std::mt19937 rng(606u);
    for (int trial = 0; trial < 10; ++trial) {
        check_routing(oracle::random_connected_graph(rng, 6, 8, 2), 1,
                      "a random instance");
        if (!c.ok) return;
    }

    // Composition of two single-edge routings: rho1*rho2*q = 1.
    {
        CommodityGraph g = single_edge();
        FlowSolution f = max_concurrent_flow(g);
        RoutingNcResult r1 = routing_as_nc(g, f);
        RoutingNcResult r2 = routing_as_nc(g, f);
        OrientedGraph g1p = orient_by_coding(g, r1.used_arc_caps);
        OrientedGraph g2p = orient_by_coding(g, r2.used_arc_caps);
        TensorResult t = graph_tensor(g1p, g2p, single_scaffold());
        NCSolution composed = compose_nc(r1.nc, r2.nc, single_scaffold(), t);
        NCReport rep = verify_nc(tensor_forward_orientation(t), composed);
        c.expect(rep.valid, "single-edge composition rejected");
        c.expect(rep.rate == Rational(1) && rep.rate_exact,
                 "single-edge composition rate is not exactly 1");
    }

    // Composition of two half-rate 4-cycle routings: rho1*rho2*q = 1/4.
    {
        CommodityGraph g = four_cycle();
        FlowSolution f = half_rate_single_path_flow();
        RoutingNcResult r1 = routing_as_nc(g, f);
        RoutingNcResult r2 = routing_as_nc(g, f);
        OrientedGraph g1p = orient_by_coding(g, r1.used_arc_caps);
        OrientedGraph g2p = orient_by_coding(g, r2.used_arc_caps);
        Rational rho1 = verify_nc(g1p, r1.nc).rate;
        Rational rho2 = verify_nc(g2p, r2.nc).rate;
        ColoredBipartite b = low_girth_scaffold();
        TensorResult t = graph_tensor(g1p, g2p, b);
        NCSolution composed = compose_nc(r1.nc, r2.nc, b, t);
        NCReport rep = verify_nc(tensor_forward_orientation(t), composed);
        c.expect(rep.valid, "4-cycle composition rejected");
        c.expect(rep.rate_exact, "4-cycle composition rate not certified exact");
        c.expect(rep.rate == rho1 * rho2 * t.cert.q,
                 "4-cycle composition rate is not rho1*rho2*q");
        c.expect(rep.rate == Rational(1, 4), "4-cycle composition rate is not 1/4");
    }
}

// --- criterion 7: sparsity products hold and sparsity dominates lambda ---

void criterion7(Checker& c) {
    TensorResult t1 = graph_tensor(forward_all(single_edge()), forward_all(single_edge()),
                                   single_scaffold());
    TensorResult t2 = graph_tensor(forward_all(single_edge()), orient_half(four_cycle()),
                                   two_by_two_scaffold());
    TensorResult t3 = graph_tensor(orient_half(four_cycle()), orient_half(four_cycle()),
                                   low_girth_scaffold());

    struct ProductCase {
        const char* tag;
        CommodityGraph g1, g2, tensor;
    };
    std::vector<ProductCase> cases = {
        {"single x single", single_edge(), single_edge(), t1.graph},
        {"single x 4-cycle", single_edge(), four_cycle(), t2.graph},
        {"4-cycle x 4-cycle", four_cycle(), four_cycle(), t3.graph},
    };
    for (const ProductCase& pc : cases) {
        SparsityProduct sp = check_sparsity_product(with_unit_demands(pc.g1),
                                                    with_unit_demands(pc.g2),
                                                    with_unit_demands(pc.tensor));
        c.expect(sp.holds, std::string("sparsity product fails on ") + pc.tag);
        c.expect(sp.lhs >= sp.rhs, std::string("product report inconsistent on ") + pc.tag);
    }

    struct SandwichCase {
        const char* tag;
        CommodityGraph g;
    };
    std::vector<SandwichCase> fixtures = {
        {"the single edge", single_edge()}, {"the 4-cycle", four_cycle()},
        {"K_{2,3}", k23()},                 {"the butterfly", butterfly()},
        {"tensor single x single", t1.graph},
        {"tensor single x 4-cycle", t2.graph},
        {"tensor 4-cycle x 4-cycle", t3.graph},
    };
    for (const SandwichCase& sc : fixtures) {
        SandwichReport rep = sandwich_report(sc.g);
        c.expect(rep.lambda <= rep.sparsity,
                 std::string("lambda exceeds sparsity on ") + sc.tag);
        c.expect(rep.ratio >= Rational(1),
                 std::string("sandwich ratio below 1 on ") + sc.tag);
    }
}

// --- criterion 8: amplification bookkeeping and the size refusal ---

void criterion8(Checker& c) {
    AmplifyTrace tr = iterate(four_cycle(), quarter_dual(), Rational(0), 2);
    c.expect(tr.steps.size() == 2, "expected exactly two recorded steps");
    if (tr.steps.size() != 2) return;
    const AmplifyStep& s0 = tr.steps[0];
    const AmplifyStep& s1 = tr.steps[1];

    c.expect(s1.gap_factor == s0.gap_factor * s0.gap_factor,
             "gap factor is not squared per iteration");
    c.expect(s1.w_min == s0.w_min * s0.w_min, "w_min is not squared per iteration");
    c.expect(s1.l_max <= s0.l_max * s0.l_max, "l_max exceeds its squared bound");
    c.expect(s1.commodity_count == s1.scaffold_n1 * s0.commodity_count,
             "commodity recurrence k1 = n1*k0 broken");

    RecurrenceCheck rec = evaluate_recurrences(big(s0.edge_count), big(s0.commodity_count),
                                               big(s0.vertex_count), big(s1.scaffold_n1));
    c.expect(rec.m_i == big(s1.edge_count), "edge recurrence m1 = (n1/k0)*4*m0^2 broken");
    c.expect(rec.k_i == big(s1.commodity_count), "recurrence cross-check on k1 broken");
    c.expect(big(s1.vertex_count) <= rec.v_bound, "vertex count exceeds its bound");
    c.expect(rec.ratio_identity, "m/k ratio identity broken");

    SizeEstimate est = size_estimate(4, Rational(3), 1);
    c.expect(est.exact_available, "closed-form size estimate unavailable");
    c.expect(big(s1.edge_count) <= est.exact_value,
             "edge count exceeds the closed-form estimate");

    c.expect(tr.refusal.refused, "expected a clean size refusal at iteration 2");
    c.expect(!tr.refusal.reason.empty(), "refusal carries no reason");
    c.expect(tr.refusal.required_r > 0 && tr.refusal.required_s > 0,
             "refusal misses the required scaffold degrees");
    c.expect(tr.refusal.required_girth > 0, "refusal misses the required girth");
    c.expect(tr.refusal.size_cap == kDefaultSizeCap, "refusal records the wrong cap");
    c.expect(tr.refusal.size_floor > tr.refusal.size_cap,
             "refusal floor does not exceed the cap");
}

struct Criterion {
    const char* label;
    double budget_seconds;
    void (*run)(Checker&);
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"exact duality and dual domination on 50 random instances", 60.0, criterion1},
        {"colored biregular construction matches the worked sizes", 1.0, criterion2},
        {"color lifts preserve girth and reach the 2g bound", 120.0, criterion3},
        {"certified tensor duals pin every pair distance", 60.0, criterion4},
        {"standardization transforms are exact", 10.0, criterion5},
        {"codes verify, routings emulate, compositions multiply", 30.0, criterion6},
        {"sparsity products hold and sparsity dominates lambda", 120.0, criterion7},
        {"amplification bookkeeping and the size refusal", 300.0, criterion8},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("unexpected exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       start).count();
        if (seconds > criteria[i].budget_seconds) {
            c.expect(false, "time budget exceeded");
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].label << " [" << std::fixed << std::setprecision(2)
                  << seconds << "s]";
        if (!c.ok) std::cout << " (" << c.why << ")";
        std::cout << "\n";
        if (!c.ok) ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
