#include "gaptensor/standard_form.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "gaptensor/errors.hpp"
#include "gaptensor/mcf.hpp"

namespace gaptensor {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

void check_dual_shape(const CommodityGraph& g, const DualSolution& d, const char* who) {
    if (d.weights.size() != g.edges.size()) {
        throw ContractViolation(std::string(who) + ": dual has wrong weight count");
    }
}

Rational recompute_objective(const CommodityGraph& g, const DualSolution& d) {
    Rational z(0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        z += d.weights[e] * g.edges[e].capacity;
    }
    z.canonicalize();
    return z;
}

}  // namespace

std::pair<CommodityGraph, DualSolution> contract_zero_weight(const CommodityGraph& g,
                                                             const DualSolution& d) {
    require_valid(g, "contract_zero_weight");
    check_dual_shape(g, d, "contract_zero_weight");
    DualCheck check = verify_dual(g, d);
    if (!check.feasible) {
        throw ContractViolation("contract_zero_weight: input dual is infeasible");
    }

    UnionFind uf(g.vertex_count);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (d.weights[e] == 0) uf.unite(g.edges[e].u, g.edges[e].v);
    }
    // Dense ids in root-first-appearance order.
    std::vector<int> new_id(g.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int r = uf.find(v);
        if (new_id[r] == -1) new_id[r] = next++;
        new_id[v] = new_id[r];
    }

    CommodityGraph out;
    out.vertex_count = next;
    DualSolution out_dual;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (d.weights[e] == 0) continue;
        int u = new_id[g.edges[e].u];
        int v = new_id[g.edges[e].v];
        if (u == v) continue;  // positive weight collapsed into a loop
        out.edges.push_back({u, v, g.edges[e].capacity});
        out_dual.weights.push_back(d.weights[e]);
    }
    for (const Commodity& c : g.commodities) {
        int s = new_id[c.source];
        int t = new_id[c.sink];
        if (s == t) continue;  // endpoints merged; its distance term was 0
        out.commodities.push_back({s, t, c.demand});
    }
    out_dual.objective = recompute_objective(out, out_dual);
    require_valid(out, "contract_zero_weight (output)");
    return {out, out_dual};
}

CommodityGraph equalize_demands(const CommodityGraph& g) {
    require_valid(g, "equalize_demands");
    if (g.commodities.empty()) return g;
    Rational x = g.commodities.front().demand;
    for (const Commodity& c : g.commodities) x = rational_gcd(x, c.demand);

    CommodityGraph out;
    out.vertex_count = g.vertex_count;
    out.edges = g.edges;
    for (const Commodity& c : g.commodities) {
        Rational copies_rat = c.demand / x;
        copies_rat.canonicalize();
        assert(copies_rat.get_den() == 1);
        if (!copies_rat.get_num().fits_slong_p()) {
            throw Refusal("equalize_demands: demand ratio too large to enumerate");
        }
        long copies = copies_rat.get_num().get_si();
        for (long i = 0; i < copies; ++i) {
            out.commodities.push_back({c.source, c.sink, x});
        }
    }
    return out;
}

std::pair<CommodityGraph, DualSolution> alpha_extension(const CommodityGraph& g,
                                                        const DualSolution& d,
                                                        const Rational& eps,
                                                        const Rational& alpha) {
    require_valid(g, "alpha_extension");
    check_dual_shape(g, d, "alpha_extension");
    if (!(alpha > 0 && alpha < eps)) {
        throw ContractViolation("alpha_extension: alpha must lie strictly between 0 and eps");
    }
    if (g.commodities.empty()) {
        throw ContractViolation("alpha_extension: no commodities to move to leaves");
    }
    const Rational demand = g.commodities.front().demand;
    for (const Commodity& c : g.commodities) {
        if (c.demand != demand) {
            throw ContractViolation("alpha_extension: demands are not all equal");
        }
    }
    DualCheck check = verify_dual(g, d);
    if (!check.feasible) {
        throw ContractViolation("alpha_extension: input dual is infeasible");
    }
    const Rational z = recompute_objective(g, d);
    const long k = static_cast<long>(g.commodities.size());

    Rational leaf_cap = z * demand * (Rational(1) + eps);
    Rational leaf_weight = alpha / (Rational(2 * k) * demand * (Rational(1) + eps));
    leaf_cap.canonicalize();
    leaf_weight.canonicalize();

    CommodityGraph out;
    out.vertex_count = g.vertex_count + 2 * static_cast<int>(k);
    out.edges = g.edges;
    DualSolution out_dual;
    out_dual.weights = d.weights;
    for (long i = 0; i < k; ++i) {
        const Commodity& c = g.commodities[i];
        int leaf_s = g.vertex_count + 2 * static_cast<int>(i);
        int leaf_t = leaf_s + 1;
        out.edges.push_back({c.source, leaf_s, leaf_cap});
        out_dual.weights.push_back(leaf_weight);
        out.edges.push_back({c.sink, leaf_t, leaf_cap});
        out_dual.weights.push_back(leaf_weight);
        out.commodities.push_back({leaf_s, leaf_t, c.demand});
    }
    // 2k * leaf_weight * leaf_cap telescopes to alpha*z, so this is exact.
    out_dual.objective = z * (Rational(1) + alpha);
    out_dual.objective.canonicalize();
    assert(recompute_objective(out, out_dual) == out_dual.objective);
    require_valid(out, "alpha_extension (output)");
    return {out, out_dual};
}

StandardFormReport is_standard_form(const CommodityGraph& g, const DualSolution& d) {
    require_valid(g, "is_standard_form");
    StandardFormReport report;
    if (d.weights.size() != g.edges.size()) {
        report.violations.push_back("dual weight count mismatch");
        return report;
    }

    bool equal = !g.commodities.empty();
    Rational demand = equal ? g.commodities.front().demand : Rational(0);
    for (const Commodity& c : g.commodities) {
        if (c.demand != demand) equal = false;
    }
    if (g.commodities.empty()) report.violations.push_back("no commodities");
    else if (!equal) report.violations.push_back("demands not all equal");

    std::set<int> terminals;
    bool distinct = true;
    for (const Commodity& c : g.commodities) {
        if (!terminals.insert(c.source).second) distinct = false;
        if (!terminals.insert(c.sink).second) distinct = false;
    }
    if (!distinct) report.violations.push_back("terminals not distinct");

    Rational w_min(0);
    bool first = true;
    bool positive = true;
    for (const Rational& w : d.weights) {
        if (w <= 0) positive = false;
        if (first || w < w_min) w_min = w;
        first = false;
    }
    if (g.edges.empty()) {
        positive = false;
        report.violations.push_back("no edges");
    } else if (!positive) {
        report.violations.push_back("zero dual weight");
    }

    DualCheck check = verify_dual(g, d);
    if (!check.feasible) report.violations.push_back("dual infeasible");

    report.standard = report.violations.empty();
    if (report.standard) {
        report.certificate.equal_demand = demand;
        report.certificate.distinct_terminals = distinct;
        report.certificate.min_dual_weight = w_min;
    }
    return report;
}

}  // namespace gaptensor
