#pragma once

#include <utility>
#include <vector>

#include "gaptensor/cbg.hpp"
#include "gaptensor/graph.hpp"
#include "gaptensor/mcf.hpp"

namespace gaptensor {

// Splits every edge into two directed arcs whose capacities sum to the edge
// capacity exactly; any slack in the supplied split is added to the forward
// arc. Throws ContractViolation when a split exceeds the edge capacity.
OrientedGraph orient_by_coding(const CommodityGraph& g,
                               const std::vector<std::pair<Rational, Rational>>& arc_caps);

// Default orientation: half/half on every edge.
OrientedGraph orient_half(const CommodityGraph& g);

// Scaffold girth parameter: g = max(3, ceil(l1*l2 / (w1*w2))). Requires both
// minimum weights strictly positive.
long long girth_requirement(const DistanceSummary& dist1, const DistanceSummary& dist2);

struct TensorCertificate {
    Rational q;             // n1/k2 = n2/m1'
    long long girth_param_g = 0;  // requirement the scaffold was checked against (0 = unchecked)
    Rational new_demand;    // d1*d2/q
    Rational z_product;     // q*z1*z2, filled in by tensor_dual
    Girth scaffold_girth;   // actual girth of the scaffold used

    // copy_maps[y][p] = (right copy, G2 commodity) replacing arc p at left copy y.
    std::vector<std::vector<std::pair<int, int>>> copy_maps;
    // Disjoint-sum vertex -> tensor vertex. G1 copies first (copy-major),
    // then G2 copies.
    std::vector<int> vertex_merge_map;

    struct EdgeOrigin {
        int right_copy = 0;
        int g2_arc = 0;
        int g1_arc = 0;  // the a-color of the right copy
    };
    std::vector<EdgeOrigin> edge_origin;  // per tensor edge
    std::vector<int> right_a_color;       // per right copy

    int n1 = 0, n2 = 0;              // scaffold side sizes
    int g1_vertices = 0, g2_vertices = 0;
};

struct TensorResult {
    CommodityGraph graph;
    TensorCertificate cert;
    // Inputs retained so dual extraction and composition can be checked
    // without re-supplying them.
    OrientedGraph g1p, g2p;
};

// The tensor product: n1 copies of G1', n2 copies of G2', glued by the
// scaffold. Scaffold edge (u,v) colored (p,k) merges G2-copy v's commodity-k
// terminals onto the endpoints of arc p in G1-copy u. Zero-capacity arcs
// produce no tensor edge. Commodities are the G1 commodities of every copy
// with demand d1*d2/q.
TensorResult graph_tensor(const OrientedGraph& g1p, const OrientedGraph& g2p,
                          const ColoredBipartite& b);

struct TensorDualResult {
    DualSolution dual;
    Rational z_product;       // q*z(D1)*z(D2); equals dual.objective exactly
    long long required_g = 0; // girth_requirement of the two duals
    Girth scaffold_girth;
    bool certified = false;   // scaffold girth >= 2*required_g
};

// Product dual: tensor edge from arc p (copy of G1 edge e1) and G2 arc a
// (edge e2) gets weight w1[e1]*w2[e2]. The objective equals q*z1*z2
// unconditionally; the distance lower bound is certified only when the
// scaffold girth clears 2*girth_requirement.
TensorDualResult tensor_dual(const CommodityGraph& g1, const CommodityGraph& g2,
                             const DualSolution& d1, const DualSolution& d2,
                             const TensorResult& t);

// Composition rate bound r1*r2*(1+eps1)*(1+eps2)*q. The eps values are
// carried assumptions, never computed here.
Rational nc_rate_lower_bound(const Rational& r1, const Rational& r2, const Rational& eps1,
                             const Rational& eps2, const Rational& q);

}  // namespace gaptensor
