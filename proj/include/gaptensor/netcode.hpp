#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaptensor/graph.hpp"
#include "gaptensor/mcf.hpp"
#include "gaptensor/tensor.hpp"

namespace gaptensor {

inline constexpr long long kDefaultMessageCap = 1LL << 16;

// A fractional network coding solution at time scale b: every commodity i
// draws a uniform message from [0, message_sizes[i]); every arc carries one
// symbol from its alphabet, a total function of the joint message.
struct NCSolution {
    std::vector<long long> message_sizes;       // per commodity, >= 1
    std::vector<long long> arc_alphabets;       // per arc (2 per edge), >= 1
    std::vector<std::vector<int>> coding_tables;  // per arc, size prod(message_sizes)
    Rational scale_b = 1;
};

// Entropy of one arc's symbol under the uniform joint message. Exact when
// the symbol distribution is dyadic (all counts and the message total powers
// of two); otherwise bits holds a truncated value and approx a double.
struct ArcEntropy {
    bool exact = false;
    Rational bits;
    double approx = 0.0;
};

struct NCReport {
    bool valid = false;
    Rational rate;
    bool rate_exact = false;
    long long message_total = 0;
    std::vector<std::string> violations;
    std::vector<int> admission_order;  // causal witness: arcs in admission order
    std::vector<ArcEntropy> entropies; // per arc
};

// Checks an NC solution on an oriented graph:
//  - structure: table sizes, alphabet ranges, message space within cap;
//  - causality: every arc's symbol is computable at its tail from source
//    messages originating there plus already-admitted in-arcs (fixed point);
//  - correctness: each commodity's message is determined at its sink;
//  - capacity: H(fwd) + H(bwd) <= c(e)*b per edge, decided exactly;
//  - rate: min_i H(S_i)/(d_i*b), exact when all message sizes are powers of
//    two, otherwise a certified dyadic lower bound (rate_exact = false).
NCReport verify_nc(const OrientedGraph& g, const NCSolution& n,
                   long long message_cap = kDefaultMessageCap);

ArcEntropy entropy_of_arc(const NCSolution& n, int arc);

struct RoutingNcResult {
    NCSolution nc;
    // Per edge, capacity actually used by forwarded fragments (fwd, bwd);
    // feed to orient_by_coding to get a graph the solution verifies on.
    std::vector<std::pair<Rational, Rational>> used_arc_caps;
};

// Emulates a feasible concurrent flow by forwarding message fragments along
// a path decomposition. b is the smallest multiple of the flow denominators
// that is >= precision, so every path carries an integer number of fragments
// and the verified rate equals lambda exactly.
RoutingNcResult routing_as_nc(const CommodityGraph& g, const FlowSolution& f,
                              long long precision = 1,
                              long long message_cap = kDefaultMessageCap);

// Forward-only orientation of a tensor: each tensor edge keeps the direction
// of the G2 arc that generated it.
OrientedGraph tensor_forward_orientation(const TensorResult& t);

// N2-over-N1 composition on the tensor. Tensor arcs in right copy j carry
// n2's symbol evaluated at the message tuple whose k-th coordinate is n1's
// symbol on arc p at the left copy gluing (j,k). scale_b is recomputed from
// the composed entropies. The output lives on tensor_forward_orientation(t).
NCSolution compose_nc(const NCSolution& n1, const NCSolution& n2, const ColoredBipartite& b,
                      const TensorResult& t, long long message_cap = kDefaultMessageCap);

}  // namespace gaptensor
