#include "gaptensor/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "gaptensor/errors.hpp"

namespace gaptensor {

std::string format_girth(const Girth& g) {
    return g.finite ? std::to_string(g.length) : std::string("inf");
}

Girth parse_girth(const std::string& text) {
    if (text == "inf") return Girth::infinite();
    try {
        std::size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size() || v <= 0) throw std::invalid_argument("range");
        return Girth::of(v);
    } catch (const std::exception&) {
        throw ParseError("malformed girth '" + text + "'");
    }
}

Girth girth(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    const int n = vertex_count;
    const int m = static_cast<int>(edges.size());
    // Self-loops are not produced by any construction here, but give the
    // honest answer if one appears.
    for (const auto& [u, v] : edges) {
        if (u == v) return Girth::of(1);
    }

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int id = 0; id < m; ++id) {
        adj[edges[id].first].push_back({edges[id].second, id});
        adj[edges[id].second].push_back({edges[id].first, id});
    }

    const int kUnreached = std::numeric_limits<int>::max();
    int best = kUnreached;
    std::vector<int> dist(n), parent_edge(n);

    // BFS from every start. For a shortest cycle C and any start on C, all
    // BFS distances to C agree with the along-cycle distances (a shortcut
    // would yield a shorter cycle), so the far edge of C is a non-tree edge
    // and scores exactly |C|. Non-tree edges never score below the girth.
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (auto [y, id] : adj[x]) {
                if (dist[y] == kUnreached) {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = id;
                    queue.push_back(y);
                }
            }
        }
        for (int id = 0; id < m; ++id) {
            int u = edges[id].first, v = edges[id].second;
            if (dist[u] == kUnreached || dist[v] == kUnreached) continue;
            if (parent_edge[u] == id || parent_edge[v] == id) continue;  // tree edge
            int candidate = dist[u] + dist[v] + 1;
            best = std::min(best, candidate);
        }
    }
    return best == kUnreached ? Girth::infinite() : Girth::of(best);
}

Girth girth(const CommodityGraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) edges.push_back({e.u, e.v});
    return girth(g.vertex_count, edges);
}

namespace {

// Connected components over edges only (commodity endpoints must share one).
std::vector<int> components(const CommodityGraph& g) {
    std::vector<int> comp(g.vertex_count, -1);
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const Edge& e : g.edges) {
        if (e.u >= 0 && e.u < g.vertex_count && e.v >= 0 && e.v < g.vertex_count) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }
    int next = 0;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : adj[x]) {
                if (comp[y] == -1) {
                    comp[y] = next;
                    queue.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

std::vector<std::string> validate(const CommodityGraph& g) {
    std::vector<std::string> bad;
    if (g.vertex_count < 0) {
        bad.push_back("negative vertex count");
        return bad;
    }
    auto in_range = [&](int v) { return v >= 0 && v < g.vertex_count; };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (!in_range(e.u) || !in_range(e.v)) {
            bad.push_back("edge " + std::to_string(i) + " has endpoint out of range");
            continue;
        }
        if (e.u == e.v) {
            bad.push_back("edge " + std::to_string(i) + " is a self-loop");
        }
        if (e.capacity <= 0) {
            bad.push_back("edge " + std::to_string(i) + " has nonpositive capacity");
        }
    }
    for (std::size_t i = 0; i < g.commodities.size(); ++i) {
        const Commodity& k = g.commodities[i];
        if (!in_range(k.source) || !in_range(k.sink)) {
            bad.push_back("commodity " + std::to_string(i) + " has endpoint out of range");
            continue;
        }
        if (k.source == k.sink) {
            bad.push_back("commodity " + std::to_string(i) + " has source equal to sink");
        }
        if (k.demand <= 0) {
            bad.push_back("commodity " + std::to_string(i) + " has nonpositive demand");
        }
    }
    if (bad.empty()) {
        std::vector<int> comp = components(g);
        for (std::size_t i = 0; i < g.commodities.size(); ++i) {
            const Commodity& k = g.commodities[i];
            if (comp[k.source] != comp[k.sink]) {
                bad.push_back("commodity " + std::to_string(i) +
                              " endpoints are in different components");
            }
        }
    }
    return bad;
}

void require_valid(const CommodityGraph& g, const std::string& context) {
    std::vector<std::string> bad = validate(g);
    if (bad.empty()) return;
    std::string msg = context + ": invalid graph";
    for (const std::string& b : bad) msg += "; " + b;
    throw ContractViolation(msg);
}

}  // namespace gaptensor
