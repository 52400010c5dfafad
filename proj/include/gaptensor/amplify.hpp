#pragma once

// Gap amplification driver: standardize a graph-dual pair, then repeatedly
// tensor it with itself, recording the exact bookkeeping and refusing cleanly
// when the required scaffold outgrows the size cap.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gaptensor/graph.hpp"
#include "gaptensor/tensor.hpp"

namespace gaptensor {

inline constexpr long long kDefaultSizeCap = 1000000;  // tensor vertices

struct AmplifyCertificate {
    TensorCertificate tensor;
    Rational claimed_gap;   // (1+eps)^2, conditional on the asserted input gap
    Rational z_in, z_out;   // z_out = q * z_in^2 (asserted exactly)
    Rational w_in, l_in;    // dual weight floor and distance ceiling used
    long long girth_param = 0;
    long long scaffold_n1 = 0, scaffold_n2 = 0;
};

struct AmplifyStep {
    int iteration = 0;  // 0 is the standardized starting pair
    long long vertex_count = 0, edge_count = 0, commodity_count = 0;
    Rational demand;
    Rational z;
    Rational gap_factor;  // 1 + eps_i, an assumption tag
    long long girth_param = 0;        // 0 for iteration 0
    Rational w_min, l_max;
    long long scaffold_n1 = 0, scaffold_n2 = 0;  // 0 for iteration 0
};

struct AmplifyRefusal {
    bool refused = false;
    std::string reason;
    long long required_r = 0, required_s = 0;
    long long required_girth = 0;
    long long size_floor = 0;
    long long size_cap = 0;
};

struct AmplifyTrace {
    std::vector<AmplifyStep> steps;
    AmplifyRefusal refusal;
    // The resulting pair after the last completed iteration.
    CommodityGraph graph;
    DualSolution dual;
};

// One tensor squaring. Requires (g, d) in standard form; eps >= 0 is the
// caller's assumption about the coding gap.
std::tuple<CommodityGraph, DualSolution, AmplifyCertificate> amplify_once(
    const CommodityGraph& g, const DualSolution& d, const Rational& eps,
    long long size_cap = kDefaultSizeCap);

// Standardizes (contract, equalize, alpha-extend with
// 1+alpha = (1+eps)/(1+eps/2), split edges until m >= max(k, n)), then runs
// up to max_iters squarings, stopping with a refusal record when the scaffold
// would exceed size_cap.
AmplifyTrace iterate(const CommodityGraph& g, const DualSolution& d, const Rational& eps,
                     int max_iters, long long size_cap = kDefaultSizeCap);

struct SizeEstimate {
    BigInt exponent;         // (4*c1)^(2^(i+1)) when integral
    bool exponent_integral = false;
    double log2_value = 0;   // exponent * log2(3*c_m)
    bool exact_available = false;
    BigInt exact_value;      // (3*c_m)^exponent when it fits the budget
};

// Closed-form edge bound m_i <= (3*c_m)^((4*c1)^(2^(i+1))).
SizeEstimate size_estimate(long long c_m, const Rational& c1, int i);

struct RecurrenceCheck {
    BigInt m_i;       // (n1i/k_prev) * 4 * m_prev^2
    BigInt k_i;       // n1i * k_prev
    BigInt v_bound;   // 2 * m_prev * v_prev * n1i / k_prev
    bool ratio_identity = false;  // m_i/k_i = 4*(m_prev/k_prev)^2
};

RecurrenceCheck evaluate_recurrences(const BigInt& m_prev, const BigInt& k_prev,
                                     const BigInt& v_prev, const BigInt& n1i);

// Splits edges into parallel equal parts until m >= max(k, n). Lambda,
// sparsity, and (with inherited weights) dual feasibility are invariant.
CommodityGraph ensure_edge_dominance(const CommodityGraph& g);

// Same split with the dual's weights carried onto the parts.
std::pair<CommodityGraph, DualSolution> ensure_edge_dominance(const CommodityGraph& g,
                                                              const DualSolution& d);

}  // namespace gaptensor
