#include "gaptensor/amplify.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "gaptensor/cbg.hpp"
#include "gaptensor/errors.hpp"
#include "gaptensor/mcf.hpp"
#include "gaptensor/standard_form.hpp"

namespace gaptensor {

namespace {

constexpr unsigned long kEstimateBitBudget = 1UL << 24;

// Split plan shared by both ensure_edge_dominance overloads: edge p gains
// extra[p] parallel copies, every part carrying capacity/(1+extra[p]).
std::vector<long long> split_plan(const CommodityGraph& g) {
    const long long m = static_cast<long long>(g.edges.size());
    const long long need = std::max<long long>(g.commodities.size(), g.vertex_count);
    std::vector<long long> extra(g.edges.size(), 0);
    if (m == 0 || m >= need) return extra;
    long long deficit = need - m;
    for (long long j = 0; j < deficit; ++j) ++extra[j % m];
    return extra;
}

CommodityGraph apply_split(const CommodityGraph& g, const std::vector<long long>& extra,
                           const DualSolution* d, DualSolution* out_dual) {
    CommodityGraph out;
    out.vertex_count = g.vertex_count;
    out.commodities = g.commodities;
    out.edges = g.edges;
    if (out_dual) out_dual->weights = d->weights;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (extra[e] == 0) continue;
        Rational part = g.edges[e].capacity / Rational(static_cast<long>(1 + extra[e]));
        part.canonicalize();
        out.edges[e].capacity = part;
    }
    // Copies appended round-robin, matching the plan's order.
    const long long m = static_cast<long long>(g.edges.size());
    std::vector<long long> remaining = extra;
    bool more = true;
    while (more) {
        more = false;
        for (long long e = 0; e < m; ++e) {
            if (remaining[e] == 0) continue;
            --remaining[e];
            more = true;
            out.edges.push_back({g.edges[e].u, g.edges[e].v, out.edges[e].capacity});
            if (out_dual) out_dual->weights.push_back(d->weights[e]);
        }
    }
    if (out_dual) {
        Rational z(0);
        for (std::size_t e = 0; e < out.edges.size(); ++e) {
            z += out_dual->weights[e] * out.edges[e].capacity;
        }
        z.canonicalize();
        out_dual->objective = z;
    }
    return out;
}

AmplifyStep measure_step(int iteration, const CommodityGraph& g, const DualSolution& d,
                         const Rational& gap_factor) {
    AmplifyStep step;
    step.iteration = iteration;
    step.vertex_count = g.vertex_count;
    step.edge_count = static_cast<long long>(g.edges.size());
    step.commodity_count = static_cast<long long>(g.commodities.size());
    step.demand = g.commodities.empty() ? Rational(0) : g.commodities.front().demand;
    DistanceSummary ds = shortest_pair_distances(g, d.weights);
    step.w_min = ds.w_min;
    step.l_max = ds.l_max;
    step.gap_factor = gap_factor;
    Rational z(0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) z += d.weights[e] * g.edges[e].capacity;
    z.canonicalize();
    step.z = z;
    return step;
}

}  // namespace

CommodityGraph ensure_edge_dominance(const CommodityGraph& g) {
    require_valid(g, "ensure_edge_dominance");
    return apply_split(g, split_plan(g), nullptr, nullptr);
}

std::pair<CommodityGraph, DualSolution> ensure_edge_dominance(const CommodityGraph& g,
                                                              const DualSolution& d) {
    require_valid(g, "ensure_edge_dominance");
    if (d.weights.size() != g.edges.size()) {
        throw ContractViolation("ensure_edge_dominance: dual has wrong weight count");
    }
    DualSolution out_dual;
    CommodityGraph out = apply_split(g, split_plan(g), &d, &out_dual);
    return {out, out_dual};
}

std::tuple<CommodityGraph, DualSolution, AmplifyCertificate> amplify_once(
    const CommodityGraph& g, const DualSolution& d, const Rational& eps,
    long long size_cap) {
    require_valid(g, "amplify_once");
    if (eps < 0) throw ContractViolation("amplify_once: eps must be nonnegative");
    StandardFormReport form = is_standard_form(g, d);
    if (!form.standard) {
        throw ContractViolation("amplify_once: input pair is not in standard form (" +
                                (form.violations.empty() ? "?" : form.violations.front()) +
                                ")");
    }

    DistanceSummary ds = shortest_pair_distances(g, d.weights);
    const long long g_req = girth_requirement(ds, ds);

    const long long v = g.vertex_count;
    const long long m = static_cast<long long>(g.edges.size());
    const long long k = static_cast<long long>(g.commodities.size());
    // Tensor vertices per scaffold vertex: V_T = N1*v + N2*(v-2k) with
    // N2 = N1*(2m)/k, so (N1+N2) * ((k+2m)v - 4mk) / (k+2m) = V_T.
    const long long weight_num = (k + 2 * m) * v - 4 * m * k;
    const long long scaffold_cap = (weight_num > 0)
                                       ? size_cap * (k + 2 * m) / weight_num
                                       : size_cap;
    auto refuse = [&](long long floor_hint, const std::string& why) -> Refusal {
        Refusal::Requirement req;
        req.required_r = 2 * m;
        req.required_s = k;
        req.required_girth = 2 * g_req;
        req.size_floor = floor_hint;
        req.size_cap = size_cap;
        return Refusal("amplify_once: " + why, req);
    };
    if (2 * m > std::numeric_limits<int>::max() || g_req > std::numeric_limits<int>::max()) {
        throw refuse(0, "scaffold requirement out of integer range");
    }

    ColoredBipartite scaffold;
    try {
        scaffold = construct_cbg(static_cast<int>(2 * m), static_cast<int>(k),
                                 static_cast<int>(g_req), scaffold_cap);
    } catch (const Refusal& inner) {
        long long floor_hint = 0;
        if (inner.has_requirement()) {
            // Scale the scaffold-vertex floor back to tensor vertices.
            floor_hint = inner.requirement().size_floor * weight_num / (k + 2 * m);
        }
        throw refuse(floor_hint, "required scaffold exceeds the size cap (girth " +
                                     std::to_string(2 * g_req) + ", degrees " +
                                     std::to_string(2 * m) + "/" + std::to_string(k) + ")");
    }

    OrientedGraph oriented = orient_half(g);
    TensorResult t = graph_tensor(oriented, oriented, scaffold);
    TensorDualResult td = tensor_dual(g, g, d, d, t);
    if (!td.certified) {
        throw ContractViolation("amplify_once: scaffold girth certificate failed");
    }
    DualSolution dual = td.dual;

    AmplifyCertificate cert;
    cert.tensor = t.cert;
    cert.claimed_gap = (Rational(1) + eps) * (Rational(1) + eps);
    cert.claimed_gap.canonicalize();
    cert.z_in = d.objective;
    cert.z_out = dual.objective;
    cert.w_in = ds.w_min;
    cert.l_in = ds.l_max;
    cert.girth_param = g_req;
    cert.scaffold_n1 = scaffold.n1;
    cert.scaffold_n2 = scaffold.n2;
    return {t.graph, dual, cert};
}

AmplifyTrace iterate(const CommodityGraph& g, const DualSolution& d, const Rational& eps,
                     int max_iters, long long size_cap) {
    require_valid(g, "iterate");
    if (eps < 0) throw ContractViolation("iterate: eps must be nonnegative");
    DualCheck check = verify_dual(g, d);
    if (!check.feasible) throw ContractViolation("iterate: input dual is infeasible");

    // Standardize: contract, equalize, alpha-extend, pad edges.
    auto [g1, d1] = contract_zero_weight(g, d);
    CommodityGraph g2 = equalize_demands(g1);
    CommodityGraph current;
    DualSolution dual;
    Rational alpha = ((Rational(1) + eps) / (Rational(1) + eps / 2)) - 1;
    alpha.canonicalize();
    if (alpha > 0) {
        std::tie(current, dual) = alpha_extension(g2, d1, eps, alpha);
    } else {
        current = g2;
        dual = d1;
    }
    std::tie(current, dual) = ensure_edge_dominance(current, dual);
    StandardFormReport form = is_standard_form(current, dual);
    if (!form.standard) {
        throw ContractViolation("iterate: standardization failed (" +
                                (form.violations.empty() ? "?" : form.violations.front()) +
                                ")");
    }

    AmplifyTrace trace;
    Rational eps_i = eps / 2;
    eps_i.canonicalize();
    trace.steps.push_back(measure_step(0, current, dual, Rational(1) + eps_i));

    for (int i = 1; i <= max_iters; ++i) {
        try {
            auto [next_g, next_d, cert] = amplify_once(current, dual, eps_i, size_cap);
            current = std::move(next_g);
            dual = std::move(next_d);
            eps_i = (Rational(1) + eps_i) * (Rational(1) + eps_i) - 1;
            eps_i.canonicalize();
            AmplifyStep step = measure_step(i, current, dual, Rational(1) + eps_i);
            step.girth_param = cert.girth_param;
            step.scaffold_n1 = cert.scaffold_n1;
            step.scaffold_n2 = cert.scaffold_n2;
            trace.steps.push_back(step);
        } catch (const Refusal& r) {
            trace.refusal.refused = true;
            trace.refusal.reason = r.what();
            if (r.has_requirement()) {
                const Refusal::Requirement& req = r.requirement();
                trace.refusal.required_r = req.required_r;
                trace.refusal.required_s = req.required_s;
                trace.refusal.required_girth = req.required_girth;
                trace.refusal.size_floor = req.size_floor;
                trace.refusal.size_cap = req.size_cap;
            }
            break;
        }
    }
    trace.graph = std::move(current);
    trace.dual = std::move(dual);
    return trace;
}

SizeEstimate size_estimate(long long c_m, const Rational& c1, int i) {
    if (c_m < 1) throw ContractViolation("size_estimate: c_m must be >= 1");
    if (c1 < 2) throw ContractViolation("size_estimate: c1 must be >= 2");
    if (i < 0 || i > 60) throw ContractViolation("size_estimate: i out of range");

    SizeEstimate out;
    const unsigned long tower = 1UL << (i + 1);  // 2^(i+1)
    Rational base4 = Rational(4) * c1;
    base4.canonicalize();
    Rational exponent_rat;
    {
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), base4.get_num().get_mpz_t(), tower);
        mpz_pow_ui(den.get_mpz_t(), base4.get_den().get_mpz_t(), tower);
        exponent_rat = Rational(num, den);
        exponent_rat.canonicalize();
    }
    out.exponent_integral = exponent_rat.get_den() == 1;
    if (out.exponent_integral) out.exponent = exponent_rat.get_num();
    out.log2_value = exponent_rat.get_d() * std::log2(3.0 * static_cast<double>(c_m));

    if (out.exponent_integral && out.exponent.fits_ulong_p()) {
        unsigned long e = out.exponent.get_ui();
        double bits = static_cast<double>(e) * std::log2(3.0 * static_cast<double>(c_m));
        if (bits <= static_cast<double>(kEstimateBitBudget)) {
            BigInt base = to_bigint(3 * c_m);
            mpz_pow_ui(out.exact_value.get_mpz_t(), base.get_mpz_t(), e);
            out.exact_available = true;
        }
    }
    return out;
}

RecurrenceCheck evaluate_recurrences(const BigInt& m_prev, const BigInt& k_prev,
                                     const BigInt& v_prev, const BigInt& n1i) {
    if (k_prev <= 0 || m_prev <= 0 || v_prev <= 0 || n1i <= 0) {
        throw ContractViolation("evaluate_recurrences: arguments must be positive");
    }
    if (n1i % k_prev != 0) {
        throw ContractViolation("evaluate_recurrences: k_prev must divide n1i");
    }
    RecurrenceCheck out;
    BigInt q = n1i / k_prev;
    out.m_i = q * 4 * m_prev * m_prev;
    out.k_i = n1i * k_prev;
    out.v_bound = 2 * m_prev * v_prev * q;
    Rational lhs = Rational(out.m_i) / Rational(out.k_i);
    Rational prev = Rational(m_prev) / Rational(k_prev);
    Rational rhs = Rational(4) * prev * prev;
    lhs.canonicalize();
    rhs.canonicalize();
    out.ratio_identity = lhs == rhs;
    return out;
}

}  // namespace gaptensor
