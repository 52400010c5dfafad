#pragma once

// Independent reference implementations for cross-checking the library.
// Everything here favors obviousness over speed: exhaustive enumeration and
// textbook algorithms only, no shared code with src/.

#include <algorithm>
#include <deque>
#include <random>
#include <utility>
#include <vector>

#include "gaptensor/graph.hpp"
#include "gaptensor/mcf.hpp"

namespace oracle {

using gaptensor::CommodityGraph;
using gaptensor::Girth;
using gaptensor::Rational;

// Shortest cycle by checking every edge subset: a subset is a cycle iff it is
// nonempty, every touched vertex has degree exactly 2, and it is connected.
// Exponential, so keep instances at <= 14 edges.
inline Girth girth_by_subsets(int n, const std::vector<std::pair<int, int>>& edges) {
    const int m = static_cast<int>(edges.size());
    int best = -1;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> degree(n, 0);
        int count = 0;
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) {
                ++degree[edges[e].first];
                ++degree[edges[e].second];
                ++count;
            }
        }
        if (best != -1 && count >= best) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v) {
            if (degree[v] != 0 && degree[v] != 2) two_regular = false;
        }
        if (!two_regular) continue;
        // Connectivity over the selected edges.
        int start = -1;
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 2) {
                start = v;
                break;
            }
        }
        std::vector<char> seen(n, 0);
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e = 0; e < m; ++e) {
                if (!(mask & (1u << e))) continue;
                int w = -1;
                if (edges[e].first == v) w = edges[e].second;
                if (edges[e].second == v) w = edges[e].first;
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        bool connected = true;
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 2 && !seen[v]) connected = false;
        }
        if (connected) best = count;
    }
    return best == -1 ? Girth::infinite() : Girth::of(best);
}

// Shortest cycle through each edge: delete the edge, BFS between its
// endpoints, add one. Handles parallel edges (the twin copy yields distance
// one and hence a 2-cycle). Fine up to a few hundred vertices.
inline Girth girth_by_deletion(int n, const std::vector<std::pair<int, int>>& edges) {
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int e = 0; e < m; ++e) {
        adj[edges[e].first].push_back({edges[e].second, e});
        adj[edges[e].second].push_back({edges[e].first, e});
    }
    int best = -1;
    for (int e = 0; e < m; ++e) {
        std::vector<int> dist(n, -1);
        std::deque<int> queue{edges[e].first};
        dist[edges[e].first] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == edges[e].second) break;
            for (const auto& [w, id] : adj[v]) {
                if (id == e || dist[w] != -1) continue;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
        int d = dist[edges[e].second];
        if (d >= 0 && (best == -1 || d + 1 < best)) best = d + 1;
    }
    return best == -1 ? Girth::infinite() : Girth::of(best);
}

// All-pairs shortest distances via Floyd-Warshall over exact rationals.
// Returns an n*n matrix with -1 marking unreachable pairs.
inline std::vector<std::vector<Rational>> all_pairs_floyd(
    const CommodityGraph& g, const std::vector<Rational>& weights) {
    const int n = g.vertex_count;
    const Rational none(-1);
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, none));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int u = g.edges[e].u, v = g.edges[e].v;
        if (d[u][v] == none || weights[e] < d[u][v]) d[u][v] = weights[e];
        if (d[v][u] == none || weights[e] < d[v][u]) d[v][u] = weights[e];
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (d[i][k] == none) continue;
            for (int j = 0; j < n; ++j) {
                if (d[k][j] == none) continue;
                Rational via = d[i][k] + d[k][j];
                if (d[i][j] == none || via < d[i][j]) d[i][j] = via;
            }
        }
    }
    return d;
}

// Small palette of well-behaved rationals for random instances.
inline Rational random_rational(std::mt19937& rng) {
    static const int nums[] = {1, 1, 1, 2, 3, 3, 5, 2};
    static const int dens[] = {1, 2, 4, 3, 1, 2, 4, 1};
    std::uniform_int_distribution<int> pick(0, 7);
    int i = pick(rng);
    return Rational(nums[i], dens[i]);
}

// Random connected instance: spanning tree plus extra edges, then commodities
// over distinct endpoint pairs. Every pair is automatically reachable.
inline CommodityGraph random_connected_graph(std::mt19937& rng, int max_n, int max_m,
                                             int max_k) {
    CommodityGraph g;
    std::uniform_int_distribution<int> nd(2, max_n);
    g.vertex_count = nd(rng);
    for (int v = 1; v < g.vertex_count; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        g.edges.push_back({pd(rng), v, random_rational(rng)});
    }
    std::uniform_int_distribution<int> md(static_cast<int>(g.edges.size()), max_m);
    int target_m = md(rng);
    std::uniform_int_distribution<int> vd(0, g.vertex_count - 1);
    while (static_cast<int>(g.edges.size()) < target_m) {
        int u = vd(rng), v = vd(rng);
        if (u == v) continue;
        g.edges.push_back({u, v, random_rational(rng)});
    }
    std::uniform_int_distribution<int> kd(1, max_k);
    int k = kd(rng);
    for (int i = 0; i < k; ++i) {
        int s = vd(rng), t = vd(rng);
        while (t == s) t = vd(rng);
        g.commodities.push_back({s, t, random_rational(rng)});
    }
    return g;
}

// A random feasible dual: positive weights scaled so sum d_i * l_i = 1.
inline gaptensor::DualSolution random_feasible_dual(std::mt19937& rng,
                                                    const CommodityGraph& g) {
    std::vector<Rational> w(g.edges.size());
    for (auto& x : w) x = random_rational(rng);
    auto dist = all_pairs_floyd(g, w);
    Rational total = 0;
    for (const auto& c : g.commodities) total += c.demand * dist[c.source][c.sink];
    gaptensor::DualSolution d;
    d.weights.resize(w.size());
    d.objective = 0;
    for (std::size_t e = 0; e < w.size(); ++e) {
        d.weights[e] = w[e] / total;
        d.objective += d.weights[e] * g.edges[e].capacity;
    }
    return d;
}

inline std::vector<std::pair<int, int>> edge_pairs(const CommodityGraph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edges.size());
    for (const auto& e : g.edges) out.push_back({e.u, e.v});
    return out;
}

}  // namespace oracle
