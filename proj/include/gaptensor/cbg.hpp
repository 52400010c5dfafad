#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaptensor/graph.hpp"

namespace gaptensor {

// Uncolored biregular bipartite multigraph: every left vertex has degree d1,
// every right vertex degree d2.
struct BipartiteGraph {
    int n1 = 0;
    int n2 = 0;
    std::vector<std::pair<int, int>> edges;  // (left id, right id)
};

struct ColoredEdge {
    int left = 0;
    int right = 0;
    int a = 0;  // which G1 arc this scaffold edge replaces
    int b = 0;  // which G2 commodity carries it
};

// Colored biregular scaffold. Colors live in [q1] x [q2]; membership in the
// tensor-ready family additionally requires the five coloring properties
// checked by verify_colored.
struct ColoredBipartite {
    int n1 = 0;
    int n2 = 0;
    int d1 = 0;
    int d2 = 0;
    int q1 = 0;
    int q2 = 0;
    Girth declared_girth;  // even, or INFINITE
    std::vector<ColoredEdge> edges;
};

inline constexpr long long kDefaultScaffoldCap = 1000000;

// Bipartite multigraph view of the scaffold (drops colors).
Girth cbg_girth(const ColoredBipartite& b);
Girth bipartite_girth(const BipartiteGraph& b);

// Builds an (r,s)-biregular bipartite graph with girth >= 2g. Known exact
// families (stars, cycles, complete bipartite, subdivided complete graphs)
// are used when they apply; otherwise a greedy insertion with bounded
// backtracking and geometric size growth runs under the cap. Deterministic
// for a fixed seed. Throws Refusal when no graph within size_cap is found.
BipartiteGraph biregular_high_girth(int r, int s, int g,
                                    long long size_cap = kDefaultScaffoldCap,
                                    unsigned seed = 0);

// Two cyclic-shift lift stages: s copies fixing the b colors, then r copies
// fixing the a colors. Girth never decreases; the result has left degree r
// with all r a-colors present, right degree s with all s b-colors present,
// one a-color per right vertex and one b-color per left vertex.
ColoredBipartite color_lift(const BipartiteGraph& b, int r, int s);

// Stages exposed for direct inspection.
ColoredBipartite lift_right_cyclic(const BipartiteGraph& base, int s);
ColoredBipartite lift_left_cyclic(const ColoredBipartite& h, int r);

// Checks the five structural properties for replacing the m1 arcs of G1' by
// the k2 commodities of G2', plus degree regularity, the count identity
// n1*d1 = n2*d2, and the declared girth. Empty report means member.
std::vector<std::string> verify_colored(const ColoredBipartite& b, int m1, int k2);

// biregular_high_girth + color_lift + verify_colored in one step.
ColoredBipartite construct_cbg(int r, int s, int g,
                               long long size_cap = kDefaultScaffoldCap,
                               unsigned seed = 0);

}  // namespace gaptensor
