#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "gaptensor/rational.hpp"

namespace gaptensor {

// ---------------------------------------------------------------------------
// Core value types
// ---------------------------------------------------------------------------

struct Edge {
    int u = 0;
    int v = 0;
    Rational capacity;
};

struct Commodity {
    int source = 0;
    int sink = 0;
    Rational demand;
};

// Undirected capacitated multigraph with commodities. Parallel edges are
// first-class; self-loops are invalid.
struct CommodityGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Commodity> commodities;

    bool operator==(const CommodityGraph&) const = default;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.capacity == b.capacity;
}
inline bool operator==(const Commodity& a, const Commodity& b) {
    return a.source == b.source && a.sink == b.sink && a.demand == b.demand;
}

// Per-edge two-arc orientation. Arc 2e points edges[e].u -> edges[e].v,
// arc 2e+1 the reverse. Invariant: arc_capacity[2e] + arc_capacity[2e+1]
// equals the parent edge capacity exactly.
struct OrientedGraph {
    CommodityGraph base;
    std::vector<Rational> arc_capacity;

    int arc_count() const { return static_cast<int>(arc_capacity.size()); }
    int arc_tail(int a) const {
        const Edge& e = base.edges[a / 2];
        return (a % 2 == 0) ? e.u : e.v;
    }
    int arc_head(int a) const {
        const Edge& e = base.edges[a / 2];
        return (a % 2 == 0) ? e.v : e.u;
    }
};

// Nonnegative edge weights plus their objective sum(w_e * c_e).
struct DualSolution {
    std::vector<Rational> weights;
    Rational objective;
};

// ---------------------------------------------------------------------------
// Girth
// ---------------------------------------------------------------------------

// Length of a shortest cycle, or INFINITE for forests. Parallel edges form
// 2-cycles.
struct Girth {
    bool finite = false;
    int length = 0;

    static Girth infinite() { return Girth{false, 0}; }
    static Girth of(int len) { return Girth{true, len}; }

    bool operator==(const Girth&) const = default;
};

// Orders finite lengths normally; INFINITE compares greater than everything.
inline std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
    if (!a.finite && !b.finite) return std::strong_ordering::equal;
    if (!a.finite) return std::strong_ordering::greater;
    if (!b.finite) return std::strong_ordering::less;
    return a.length <=> b.length;
}

std::string format_girth(const Girth& g);
Girth parse_girth(const std::string& text);  // integer or "inf"

// Shortest cycle of an undirected multigraph given as an edge list.
// BFS from every start vertex; exact for multigraphs.
Girth girth(int vertex_count, const std::vector<std::pair<int, int>>& edges);
Girth girth(const CommodityGraph& g);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

// Returns human-readable violations; empty means valid. Checks: vertex ids in
// range, no self-loops, positive capacities, source != sink per commodity,
// positive demands, and that every commodity pair is connected.
std::vector<std::string> validate(const CommodityGraph& g);

// Throws ContractViolation listing the first violations if any.
void require_valid(const CommodityGraph& g, const std::string& context);

}  // namespace gaptensor
