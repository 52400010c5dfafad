#pragma once

// Standard form: no zero-weight dual edges, equal demands, every source and
// sink on its own vertex. The three transforms below establish it while
// keeping the dual objective under exact control.

#include <string>
#include <utility>
#include <vector>

#include "gaptensor/graph.hpp"

namespace gaptensor {

struct StandardFormCertificate {
    Rational equal_demand;      // the common demand d
    bool distinct_terminals = false;
    Rational min_dual_weight;   // w_min > 0
};

struct StandardFormReport {
    bool standard = false;
    StandardFormCertificate certificate;  // meaningful only when standard
    std::vector<std::string> violations;
};

// Contracts every zero-weight edge (merging its endpoints). Surviving edges
// keep their weights; commodities whose endpoints merge are dropped, as are
// positive-weight edges that become loops. The returned dual is feasible and,
// for duals with no positive loops created (all optimal duals), has the same
// objective.
std::pair<CommodityGraph, DualSolution> contract_zero_weight(const CommodityGraph& g,
                                                             const DualSolution& d);

// Splits every commodity (s,t,d) into d/x copies of (s,t,x), x the gcd of all
// demands. Total demand per pair, lambda, and the coding rate are invariant.
CommodityGraph equalize_demands(const CommodityGraph& g);

// Adds one leaf edge per terminal (capacity z(D)*d*(1+eps)) and moves the
// terminal onto the leaf. New edges get dual weight alpha/(2k*d*(1+eps)), so
// the returned dual's objective is exactly z(D)*(1+alpha).
std::pair<CommodityGraph, DualSolution> alpha_extension(const CommodityGraph& g,
                                                        const DualSolution& d,
                                                        const Rational& eps,
                                                        const Rational& alpha);

// Checks the standard-form predicate and returns either a certificate or the
// list of violated clauses.
StandardFormReport is_standard_form(const CommodityGraph& g, const DualSolution& d);

}  // namespace gaptensor
