#include "gaptensor/mcf.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "gaptensor/errors.hpp"
#include "gaptensor/simplex.hpp"

namespace gaptensor {

namespace {

// Single-source Dijkstra over nonnegative rational weights.
std::vector<std::optional<Rational>> dijkstra(const CommodityGraph& g,
                                              const std::vector<Rational>& weights,
                                              int source) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);  // (neighbor, edge)
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        adj[g.edges[e].u].push_back({g.edges[e].v, e});
        adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
    std::vector<std::optional<Rational>> dist(g.vertex_count);
    using Entry = std::pair<Rational, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    dist[source] = Rational(0);
    heap.push({Rational(0), source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (!dist[v] || *dist[v] < d) continue;
        for (auto [w, e] : adj[v]) {
            Rational nd = d + weights[e];
            if (!dist[w] || nd < *dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return dist;
}

}  // namespace

std::pair<FlowSolution, DualSolution> solve_primal_dual(const CommodityGraph& g) {
    require_valid(g, "max_concurrent_flow");
    if (g.commodities.empty()) {
        throw ContractViolation(
            "max_concurrent_flow: no commodities; the concurrent rate is unbounded");
    }
    const int n = g.vertex_count;
    const int m = static_cast<int>(g.edges.size());
    const int k = static_cast<int>(g.commodities.size());
    const int arcs = 2 * m;

    // Variables: x0 = lambda, then per-commodity arc flows.
    LpProblem lp;
    lp.var_count = 1 + k * arcs;
    lp.objective.assign(lp.var_count, Rational(0));
    lp.objective[0] = 1;
    auto fvar = [&](int i, int a) { return 1 + i * arcs + a; };

    // Flow conservation as equalities at every vertex except the sink:
    // net outflow - [v = s_i] * d_i * lambda = 0. Trimming cycles and excess
    // shows the equality form reaches the same optimum as the >= form.
    for (int i = 0; i < k; ++i) {
        const Commodity& c = g.commodities[i];
        for (int v = 0; v < n; ++v) {
            if (v == c.sink) continue;
            LpRow row;
            row.sense = RowSense::Equal;
            row.rhs = 0;
            for (int e = 0; e < m; ++e) {
                if (g.edges[e].u == v) {
                    row.coeffs.push_back({fvar(i, 2 * e), Rational(1)});
                    row.coeffs.push_back({fvar(i, 2 * e + 1), Rational(-1)});
                } else if (g.edges[e].v == v) {
                    row.coeffs.push_back({fvar(i, 2 * e), Rational(-1)});
                    row.coeffs.push_back({fvar(i, 2 * e + 1), Rational(1)});
                }
            }
            if (v == c.source) row.coeffs.push_back({0, -c.demand});
            lp.rows.push_back(std::move(row));
        }
    }
    const int capacity_row_base = static_cast<int>(lp.rows.size());
    for (int e = 0; e < m; ++e) {
        LpRow row;
        row.sense = RowSense::LessEq;
        row.rhs = g.edges[e].capacity;
        for (int i = 0; i < k; ++i) {
            row.coeffs.push_back({fvar(i, 2 * e), Rational(1)});
            row.coeffs.push_back({fvar(i, 2 * e + 1), Rational(1)});
        }
        lp.rows.push_back(std::move(row));
    }

    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) {
        // Zero flow is always feasible and capacities bound lambda.
        throw ContractViolation("max_concurrent_flow: solver did not reach an optimum");
    }

    FlowSolution flow;
    flow.lambda = sol.x[0];
    flow.arc_flow.assign(k, std::vector<Rational>(arcs, Rational(0)));
    for (int i = 0; i < k; ++i) {
        for (int a = 0; a < arcs; ++a) flow.arc_flow[i][a] = sol.x[fvar(i, a)];
    }

    DualSolution dual;
    dual.weights.assign(m, Rational(0));
    dual.objective = 0;
    for (int e = 0; e < m; ++e) {
        dual.weights[e] = sol.dual[capacity_row_base + e];
        dual.objective += dual.weights[e] * g.edges[e].capacity;
    }
    // Conservation rows have zero rhs, so strong duality pins the capacity
    // part of the dual objective to lambda.
    if (dual.objective != flow.lambda) {
        throw ContractViolation("max_concurrent_flow: dual objective mismatch");
    }
    return {std::move(flow), std::move(dual)};
}

FlowSolution max_concurrent_flow(const CommodityGraph& g) {
    return solve_primal_dual(g).first;
}

DualSolution optimal_dual(const CommodityGraph& g) {
    return solve_primal_dual(g).second;
}

DualCheck verify_dual(const CommodityGraph& g, const DualSolution& d) {
    require_valid(g, "verify_dual");
    const int m = static_cast<int>(g.edges.size());
    if (static_cast<int>(d.weights.size()) != m) {
        throw ContractViolation("verify_dual: weight vector length mismatch");
    }
    DualCheck check;
    check.objective = 0;
    for (int e = 0; e < m; ++e) check.objective += d.weights[e] * g.edges[e].capacity;
    if (check.objective != d.objective) {
        check.violations.push_back("stored objective differs from sum of w_e * c_e");
    }

    bool negative = false;
    for (int e = 0; e < m; ++e) {
        if (d.weights[e] < 0) {
            check.violations.push_back("edge " + std::to_string(e) + " has negative weight");
            negative = true;
        }
    }
    if (negative) {
        check.feasible = false;
        check.slack = 0;
        return check;
    }

    Rational total(0);
    std::vector<std::vector<std::optional<Rational>>> by_source;
    std::vector<int> source_slot(g.vertex_count, -1);
    for (const Commodity& c : g.commodities) {
        if (source_slot[c.source] == -1) {
            source_slot[c.source] = static_cast<int>(by_source.size());
            by_source.push_back(dijkstra(g, d.weights, c.source));
        }
        const auto& dist = by_source[source_slot[c.source]];
        if (!dist[c.sink]) {
            throw ContractViolation("verify_dual: commodity pair is disconnected");
        }
        check.distances.push_back(*dist[c.sink]);
        total += c.demand * *dist[c.sink];
    }
    check.slack = total - 1;
    if (check.slack < 0) {
        check.violations.push_back("distance constraint sum(d_i * l_i) = " +
                                   format_rational(total) + " < 1");
    }
    // Feasibility is exactly LP (3): nonnegative weights whose metric covers
    // the demands. A stale stored objective is reported but not disqualifying.
    check.feasible = check.slack >= 0;
    return check;
}

DistanceSummary shortest_pair_distances(const CommodityGraph& g,
                                        const std::vector<Rational>& weights) {
    require_valid(g, "shortest_pair_distances");
    if (static_cast<int>(weights.size()) != static_cast<int>(g.edges.size())) {
        throw ContractViolation("shortest_pair_distances: weight vector length mismatch");
    }
    if (g.commodities.empty()) {
        throw ContractViolation("shortest_pair_distances: no commodities");
    }
    if (g.edges.empty()) {
        throw ContractViolation("shortest_pair_distances: no edges");
    }
    for (const Rational& w : weights) {
        if (w < 0) throw ContractViolation("shortest_pair_distances: negative weight");
    }

    DistanceSummary out;
    std::vector<int> source_slot(g.vertex_count, -1);
    std::vector<std::vector<std::optional<Rational>>> by_source;
    for (const Commodity& c : g.commodities) {
        if (source_slot[c.source] == -1) {
            source_slot[c.source] = static_cast<int>(by_source.size());
            by_source.push_back(dijkstra(g, weights, c.source));
        }
        const auto& dist = by_source[source_slot[c.source]];
        if (!dist[c.sink]) {
            throw ContractViolation("shortest_pair_distances: commodity pair is disconnected");
        }
        out.distances.push_back(*dist[c.sink]);
    }
    out.l_max = out.distances[0];
    for (const Rational& l : out.distances) out.l_max = std::max(out.l_max, l);
    out.w_min = weights[0];
    for (const Rational& w : weights) out.w_min = std::min(out.w_min, w);
    return out;
}

Rational net_outflow(const CommodityGraph& g, const FlowSolution& f, int commodity, int vertex) {
    Rational total(0);
    const std::vector<Rational>& flow = f.arc_flow[commodity];
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (g.edges[e].u == vertex) total += flow[2 * e] - flow[2 * e + 1];
        if (g.edges[e].v == vertex) total += flow[2 * e + 1] - flow[2 * e];
    }
    return total;
}

}  // namespace gaptensor
