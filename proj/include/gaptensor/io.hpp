#pragma once

// Line-oriented text formats for every value the CLI exchanges. Serializers
// are deterministic; parse(serialize(x)) == x for all of them.

#include <string>

#include "gaptensor/cbg.hpp"
#include "gaptensor/graph.hpp"
#include "gaptensor/mcf.hpp"
#include "gaptensor/netcode.hpp"

namespace gaptensor {

// Graph file: `n <count>`, `e <u> <v> <cap>`, `k <s> <t> <demand>`.
// '#' starts a comment anywhere on a line.
CommodityGraph parse_graph(const std::string& text);
std::string serialize_graph(const CommodityGraph& g);

// Dual file: `z <value>` then `w <edge_index> <value>`, each edge exactly once.
DualSolution parse_dual(const std::string& text, std::size_t edge_count);
std::string serialize_dual(const DualSolution& d);

// Oriented graph file: a graph file followed by `a <tail> <head> <cap>`
// pairs, forward then backward per edge, summing to the edge capacity.
OrientedGraph parse_oriented(const std::string& text);
std::string serialize_oriented(const OrientedGraph& g);

// Flow file: `lambda <value>` then `f <commodity> <tail> <head> <value>` for
// every nonzero arc flow, in (commodity, arc) order. Parallel edges are
// disambiguated by first-unassigned-arc order.
FlowSolution parse_flow(const std::string& text, const CommodityGraph& g);
std::string serialize_flow(const FlowSolution& f, const CommodityGraph& g);

// CBG file: `p cbg <n1> <n2> <d1> <d2> <girth>` then `e <left> <right> <a> <b>`.
ColoredBipartite parse_cbg(const std::string& text);
std::string serialize_cbg(const ColoredBipartite& b);

// NC solution file: optional `b <value>` (scale, default 1), `m <commodity>
// <size>` in commodity order, `arc <tail> <head> <alphabet>` in arc order,
// `tab <arc_index> <outputs...>` with commodity 0 the least significant
// message digit. Endpoints are validated against g.
NCSolution parse_nc(const std::string& text, const OrientedGraph& g);
std::string serialize_nc(const NCSolution& n, const OrientedGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gaptensor
