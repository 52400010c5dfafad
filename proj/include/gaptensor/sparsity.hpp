#pragma once

// Exact sparsest cuts by enumeration, plus the tensor sparsity product check.

#include <vector>

#include "gaptensor/graph.hpp"

namespace gaptensor {

inline constexpr int kDefaultCutVertexCap = 24;

struct CutCertificate {
    std::vector<int> side_U;  // contains vertex 0; sorted
    Rational capacity;        // total capacity crossing the cut
    Rational demand;          // total demand separated by the cut
    Rational sparsity;        // capacity / demand
};

struct SparsityProduct {
    Rational lhs;  // Sparsity(tensor)
    Rational rhs;  // Sparsity(g1) * Sparsity(g2)
    bool holds = false;
};

struct SandwichReport {
    Rational lambda;
    Rational sparsity;
    Rational ratio;  // sparsity / lambda >= 1
};

// Minimum-sparsity cut over all bipartitions that separate positive demand.
// Ties break toward the lexicographically smallest U.
CutCertificate sparsest_cut_bruteforce(const CommodityGraph& g,
                                       int vertex_cap = kDefaultCutVertexCap);

// Copy of g with every demand set to 1 (the product theorem's normalization).
CommodityGraph with_unit_demands(const CommodityGraph& g);

// Sparsity(tensor) >= Sparsity(g1) * Sparsity(g2); all three graphs must
// already carry unit demands.
SparsityProduct check_sparsity_product(const CommodityGraph& g1, const CommodityGraph& g2,
                                       const CommodityGraph& tensor,
                                       int vertex_cap = kDefaultCutVertexCap);

// lambda <= sparsity with the exact gap ratio.
SandwichReport sandwich_report(const CommodityGraph& g,
                               int vertex_cap = kDefaultCutVertexCap);

}  // namespace gaptensor
