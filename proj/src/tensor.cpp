#include "gaptensor/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "gaptensor/errors.hpp"

namespace gaptensor {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// The common demand of a graph, or a contract violation.
Rational common_demand(const CommodityGraph& g, const std::string& who) {
    if (g.commodities.empty()) {
        throw ContractViolation(who + ": needs at least one commodity");
    }
    Rational d = g.commodities[0].demand;
    for (const Commodity& c : g.commodities) {
        if (c.demand != d) {
            throw ContractViolation(who + ": demands must all be equal");
        }
    }
    return d;
}

}  // namespace

OrientedGraph orient_by_coding(const CommodityGraph& g,
                               const std::vector<std::pair<Rational, Rational>>& arc_caps) {
    require_valid(g, "orient_by_coding");
    if (arc_caps.size() != g.edges.size()) {
        throw ContractViolation("orient_by_coding: arc capacity list length mismatch");
    }
    OrientedGraph out;
    out.base = g;
    out.arc_capacity.resize(2 * g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [cu, cv] = arc_caps[e];
        if (cu < 0 || cv < 0) {
            throw ContractViolation("orient_by_coding: negative arc capacity");
        }
        if (cu + cv > g.edges[e].capacity) {
            throw ContractViolation("orient_by_coding: arc capacities exceed edge capacity");
        }
        // Top up the forward arc so the pair sums to the edge capacity.
        out.arc_capacity[2 * e] = g.edges[e].capacity - cv;
        out.arc_capacity[2 * e + 1] = cv;
    }
    return out;
}

OrientedGraph orient_half(const CommodityGraph& g) {
    std::vector<std::pair<Rational, Rational>> half(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Rational h = g.edges[e].capacity / 2;
        half[e] = {h, h};
    }
    return orient_by_coding(g, half);
}

long long girth_requirement(const DistanceSummary& dist1, const DistanceSummary& dist2) {
    if (dist1.w_min <= 0 || dist2.w_min <= 0) {
        throw ContractViolation("girth_requirement: minimum dual weight must be positive");
    }
    Rational value = (dist1.l_max * dist2.l_max) / (dist1.w_min * dist2.w_min);
    BigInt g = rational_ceil(value);
    if (g < 3) return 3;
    if (!g.fits_slong_p()) {
        throw Refusal("girth_requirement: required girth exceeds representable range");
    }
    return g.get_si();
}

TensorResult graph_tensor(const OrientedGraph& g1p, const OrientedGraph& g2p,
                          const ColoredBipartite& b) {
    const CommodityGraph& g1 = g1p.base;
    const CommodityGraph& g2 = g2p.base;
    require_valid(g1, "graph_tensor(G1)");
    require_valid(g2, "graph_tensor(G2)");
    if (g1p.arc_capacity.size() != 2 * g1.edges.size() ||
        g2p.arc_capacity.size() != 2 * g2.edges.size()) {
        throw ContractViolation("graph_tensor: arc capacity lists are inconsistent");
    }

    const int m1p = g1p.arc_count();
    const int k2 = static_cast<int>(g2.commodities.size());
    const int k1 = static_cast<int>(g1.commodities.size());
    if (k2 == 0 || k1 == 0) {
        throw ContractViolation("graph_tensor: both graphs need commodities");
    }

    std::vector<std::string> member = verify_colored(b, m1p, k2);
    if (!member.empty()) {
        throw ContractViolation("graph_tensor: scaffold is not a member for (m1', k2): " +
                                member.front());
    }

    // G2 terminals must sit on pairwise distinct vertices so copy gluing is
    // unambiguous.
    {
        std::vector<char> used(g2.vertex_count, 0);
        for (const Commodity& c : g2.commodities) {
            if (used[c.source] || used[c.sink]) {
                throw ContractViolation("graph_tensor: G2 terminals must be distinct vertices");
            }
            used[c.source] = used[c.sink] = 1;
        }
    }
    Rational d1 = common_demand(g1, "graph_tensor(G1)");
    Rational d2 = common_demand(g2, "graph_tensor(G2)");

    if (b.n1 % k2 != 0) {
        throw ContractViolation("graph_tensor: k2 must divide n1");
    }
    const long long q_ll = b.n1 / k2;
    if (static_cast<long long>(b.n2) != q_ll * m1p) {
        throw ContractViolation("graph_tensor: n2 != q*m1'");
    }
    Rational q(static_cast<long>(q_ll));

    const int v1 = g1.vertex_count, v2 = g2.vertex_count;
    auto g1id = [&](int copy, int v) { return copy * v1 + v; };
    const int g2base = b.n1 * v1;
    auto g2id = [&](int copy, int v) { return g2base + copy * v2 + v; };
    const int total = b.n1 * v1 + b.n2 * v2;

    // Scaffold edge (u,v) colored (p,k): commodity k's terminals in G2-copy v
    // land on the endpoints of arc p in G1-copy u.
    UnionFind uf(total);
    std::vector<int> right_a_color(b.n2, -1);
    std::vector<std::vector<std::pair<int, int>>> copy_maps(
        b.n1, std::vector<std::pair<int, int>>(m1p, {-1, -1}));
    for (const ColoredEdge& e : b.edges) {
        const Commodity& c = g2.commodities[e.b];
        uf.merge(g1id(e.left, g1p.arc_tail(e.a)), g2id(e.right, c.source));
        uf.merge(g1id(e.left, g1p.arc_head(e.a)), g2id(e.right, c.sink));
        right_a_color[e.right] = e.a;
        copy_maps[e.left][e.a] = {e.right, e.b};
    }

    // Dense reindex in first-appearance order of the class roots.
    std::vector<int> vertex_map(total, -1);
    int next_id = 0;
    for (int x = 0; x < total; ++x) {
        int root = uf.find(x);
        if (vertex_map[root] == -1) vertex_map[root] = next_id++;
        vertex_map[x] = vertex_map[root];
    }

    TensorResult out;
    out.g1p = g1p;
    out.g2p = g2p;
    out.graph.vertex_count = next_id;
    // Each G2 copy loses exactly its 2*k2 terminal vertices to merging.
    if (next_id != b.n1 * v1 + b.n2 * (v2 - 2 * k2)) {
        throw ContractViolation("graph_tensor: merge count is inconsistent");
    }

    // Tensor edges: right-copy-major, G2 arcs in index order, zero-capacity
    // arcs dropped.
    for (int j = 0; j < b.n2; ++j) {
        const int p = right_a_color[j];
        const Rational& c1 = g1p.arc_capacity[p];
        if (c1 == 0) continue;
        for (int a = 0; a < g2p.arc_count(); ++a) {
            const Rational& c2 = g2p.arc_capacity[a];
            if (c2 == 0) continue;
            Edge e;
            e.u = vertex_map[g2id(j, g2p.arc_tail(a))];
            e.v = vertex_map[g2id(j, g2p.arc_head(a))];
            e.capacity = c1 * c2;
            out.graph.edges.push_back(e);
            out.cert.edge_origin.push_back({j, a, p});
        }
    }

    Rational new_demand = d1 * d2 / q;
    for (int y = 0; y < b.n1; ++y) {
        for (const Commodity& c : g1.commodities) {
            Commodity t;
            t.source = vertex_map[g1id(y, c.source)];
            t.sink = vertex_map[g1id(y, c.sink)];
            t.demand = new_demand;
            out.graph.commodities.push_back(t);
        }
    }

    out.cert.q = q;
    out.cert.new_demand = new_demand;
    out.cert.scaffold_girth = cbg_girth(b);
    out.cert.copy_maps = std::move(copy_maps);
    out.cert.vertex_merge_map = std::move(vertex_map);
    out.cert.right_a_color = std::move(right_a_color);
    out.cert.n1 = b.n1;
    out.cert.n2 = b.n2;
    out.cert.g1_vertices = v1;
    out.cert.g2_vertices = v2;

    // Distinct terminals per merge class rule out self-loops; validate guards
    // the remaining structural invariants.
    std::vector<std::string> bad = validate(out.graph);
    if (!bad.empty()) {
        throw ContractViolation("graph_tensor: output graph invalid: " + bad.front());
    }
    return out;
}

TensorDualResult tensor_dual(const CommodityGraph& g1, const CommodityGraph& g2,
                             const DualSolution& d1, const DualSolution& d2,
                             const TensorResult& t) {
    if (!(t.g1p.base == g1) || !(t.g2p.base == g2)) {
        throw ContractViolation("tensor_dual: tensor was built from different graphs");
    }
    if (d1.weights.size() != g1.edges.size() || d2.weights.size() != g2.edges.size()) {
        throw ContractViolation("tensor_dual: weight vector length mismatch");
    }

    TensorDualResult out;
    out.dual.weights.reserve(t.graph.edges.size());
    out.dual.objective = 0;
    for (std::size_t i = 0; i < t.graph.edges.size(); ++i) {
        const TensorCertificate::EdgeOrigin& o = t.cert.edge_origin[i];
        Rational w = d1.weights[o.g1_arc / 2] * d2.weights[o.g2_arc / 2];
        out.dual.objective += w * t.graph.edges[i].capacity;
        out.dual.weights.push_back(std::move(w));
    }
    out.z_product = t.cert.q * d1.objective * d2.objective;
    // Every arc of G1' is the a-color of exactly q right copies and the two
    // arcs of an edge sum to its capacity, so the product objective is exact.
    if (out.dual.objective != out.z_product) {
        throw ContractViolation("tensor_dual: product objective identity failed");
    }

    DistanceSummary s1 = shortest_pair_distances(g1, d1.weights);
    DistanceSummary s2 = shortest_pair_distances(g2, d2.weights);
    out.required_g = girth_requirement(s1, s2);
    out.scaffold_girth = t.cert.scaffold_girth;
    out.certified = !out.scaffold_girth.finite ||
                    static_cast<long long>(out.scaffold_girth.length) >= 2 * out.required_g;
    return out;
}

Rational nc_rate_lower_bound(const Rational& r1, const Rational& r2, const Rational& eps1,
                             const Rational& eps2, const Rational& q) {
    return r1 * r2 * (1 + eps1) * (1 + eps2) * q;
}

}  // namespace gaptensor
