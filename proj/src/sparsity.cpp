#include "gaptensor/sparsity.hpp"

#include <string>

#include "gaptensor/errors.hpp"
#include "gaptensor/mcf.hpp"

namespace gaptensor {

namespace {

std::vector<int> mask_to_vertices(unsigned long mask, int n) {
    std::vector<int> out{0};
    for (int v = 1; v < n; ++v) {
        if (mask & (1UL << (v - 1))) out.push_back(v);
    }
    return out;
}

}  // namespace

CutCertificate sparsest_cut_bruteforce(const CommodityGraph& g, int vertex_cap) {
    require_valid(g, "sparsest_cut_bruteforce");
    const int n = g.vertex_count;
    if (n > vertex_cap) {
        throw Refusal("sparsest_cut_bruteforce: " + std::to_string(n) +
                      " vertices exceed the enumeration cap of " + std::to_string(vertex_cap));
    }
    if (g.commodities.empty()) {
        throw ContractViolation("sparsest_cut_bruteforce: all demands co-located");
    }

    // Normalize 0 into U; enumerate the other side over vertices 1..n-1.
    const unsigned long mask_end = (n >= 2) ? (1UL << (n - 1)) - 1 : 0;
    bool have_best = false;
    Rational best_sparsity, best_cap, best_dem;
    unsigned long best_mask = 0;
    std::vector<int> best_vertices;
    for (unsigned long mask = 0; mask < mask_end; ++mask) {
        auto in_U = [&](int v) { return v == 0 || (mask & (1UL << (v - 1))); };
        Rational dem(0);
        for (const Commodity& c : g.commodities) {
            if (in_U(c.source) != in_U(c.sink)) dem += c.demand;
        }
        if (dem == 0) continue;
        Rational cap(0);
        for (const Edge& e : g.edges) {
            if (in_U(e.u) != in_U(e.v)) cap += e.capacity;
        }
        Rational sp = cap / dem;
        sp.canonicalize();
        bool take = false;
        if (!have_best || sp < best_sparsity) {
            take = true;
        } else if (sp == best_sparsity) {
            std::vector<int> vs = mask_to_vertices(mask, n);
            if (vs < best_vertices) take = true;
        }
        if (take) {
            have_best = true;
            best_sparsity = sp;
            best_cap = cap;
            best_dem = dem;
            best_mask = mask;
            best_vertices = mask_to_vertices(mask, n);
        }
    }
    if (!have_best) {
        throw ContractViolation("sparsest_cut_bruteforce: all demands co-located");
    }
    CutCertificate cert;
    cert.side_U = mask_to_vertices(best_mask, n);
    cert.capacity = best_cap;
    cert.demand = best_dem;
    cert.sparsity = best_sparsity;
    return cert;
}

CommodityGraph with_unit_demands(const CommodityGraph& g) {
    CommodityGraph out = g;
    for (Commodity& c : out.commodities) c.demand = 1;
    return out;
}

SparsityProduct check_sparsity_product(const CommodityGraph& g1, const CommodityGraph& g2,
                                       const CommodityGraph& tensor, int vertex_cap) {
    for (const CommodityGraph* g : {&g1, &g2, &tensor}) {
        for (const Commodity& c : g->commodities) {
            if (c.demand != 1) {
                throw ContractViolation(
                    "check_sparsity_product: demands must all be rescaled to 1");
            }
        }
    }
    CutCertificate c1 = sparsest_cut_bruteforce(g1, vertex_cap);
    CutCertificate c2 = sparsest_cut_bruteforce(g2, vertex_cap);
    CutCertificate ct = sparsest_cut_bruteforce(tensor, vertex_cap);
    SparsityProduct out;
    out.lhs = ct.sparsity;
    out.rhs = c1.sparsity * c2.sparsity;
    out.rhs.canonicalize();
    out.holds = out.lhs >= out.rhs;
    return out;
}

SandwichReport sandwich_report(const CommodityGraph& g, int vertex_cap) {
    SandwichReport report;
    report.lambda = max_concurrent_flow(g).lambda;
    report.sparsity = sparsest_cut_bruteforce(g, vertex_cap).sparsity;
    if (report.lambda > report.sparsity) {
        throw ContractViolation("sandwich_report: flow rate exceeds sparsity");
    }
    report.ratio = report.sparsity / report.lambda;
    report.ratio.canonicalize();
    return report;
}

}  // namespace gaptensor
