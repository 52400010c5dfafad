#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaptensor/graph.hpp"

namespace gaptensor {

// Maximum concurrent flow: lambda plus per-commodity arc flows. Arcs follow
// the OrientedGraph convention (arc 2e runs edges[e].u -> edges[e].v, arc
// 2e+1 the reverse).
struct FlowSolution {
    Rational lambda;
    std::vector<std::vector<Rational>> arc_flow;  // [commodity][arc]
};

struct DualCheck {
    bool feasible = false;
    Rational objective;                 // recomputed sum(w_e * c_e)
    std::vector<Rational> distances;    // shortest w-distance per commodity
    Rational slack;                     // sum(d_i * l_i) - 1
    std::vector<std::string> violations;
};

// Per-commodity shortest distances under a weight vector, plus the two
// dual statistics the tensor construction needs.
struct DistanceSummary {
    std::vector<Rational> distances;
    Rational l_max;  // largest commodity distance
    Rational w_min;  // smallest edge weight
};

// Solves the concurrent-flow LP exactly. The dual solution is read off the
// optimal tableau: weights are the capacity-row multipliers, and strong
// duality makes the dual objective equal lambda.
std::pair<FlowSolution, DualSolution> solve_primal_dual(const CommodityGraph& g);

FlowSolution max_concurrent_flow(const CommodityGraph& g);
DualSolution optimal_dual(const CommodityGraph& g);

// Checks a claimed dual: weights nonnegative and sum(d_i * l(s_i,t_i)) >= 1.
// Negative weights make the metric meaningless, so distances are then left
// empty and the check just reports the violation.
DualCheck verify_dual(const CommodityGraph& g, const DualSolution& d);

// Exact shortest distances for every commodity pair under nonnegative edge
// weights. Throws ContractViolation on a negative weight, an unreachable
// pair, or an empty commodity/edge list.
DistanceSummary shortest_pair_distances(const CommodityGraph& g,
                                        const std::vector<Rational>& weights);

// Net flow out of a vertex for one commodity; used by invariant checks.
Rational net_outflow(const CommodityGraph& g, const FlowSolution& f, int commodity, int vertex);

}  // namespace gaptensor
