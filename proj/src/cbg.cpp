#include "gaptensor/cbg.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "gaptensor/errors.hpp"

namespace gaptensor {

namespace {

std::vector<std::pair<int, int>> offset_edges(const std::vector<std::pair<int, int>>& edges,
                                              int n1) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) out.push_back({u, n1 + v});
    return out;
}

}  // namespace

Girth bipartite_girth(const BipartiteGraph& b) {
    return girth(b.n1 + b.n2, offset_edges(b.edges, b.n1));
}

Girth cbg_girth(const ColoredBipartite& b) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(b.edges.size());
    for (const ColoredEdge& e : b.edges) edges.push_back({e.left, b.n1 + e.right});
    return girth(b.n1 + b.n2, edges);
}

// ---------------------------------------------------------------------------
// biregular_high_girth
// ---------------------------------------------------------------------------

namespace {

// Vertices within distance g-1 of any vertex are distinct when the girth is
// at least 2g, so the BFS tree sizes are lower bounds on the side counts.
// Saturates at cap+1.
std::pair<long long, long long> moore_bounds(int r, int s, int g, long long cap) {
    auto grow = [cap](long long acc, long long factor) {
        if (factor <= 0) return 0LL;
        if (acc > cap / std::max(1LL, factor)) return cap + 1;
        return acc * factor;
    };
    long long need_left = 0, need_right = 0;
    // Root on the left: even depths are left vertices.
    {
        long long level = 1, lefts = 0, rights = 0;
        for (int depth = 0; depth <= g - 1; ++depth) {
            if (depth % 2 == 0) lefts = std::min(cap + 1, lefts + level);
            else rights = std::min(cap + 1, rights + level);
            if (depth == 0) level = grow(level, r);
            else if (depth % 2 == 1) level = grow(level, s - 1);
            else level = grow(level, r - 1);
        }
        need_left = std::max(need_left, lefts);
        need_right = std::max(need_right, rights);
    }
    // Root on the right.
    {
        long long level = 1, lefts = 0, rights = 0;
        for (int depth = 0; depth <= g - 1; ++depth) {
            if (depth % 2 == 0) rights = std::min(cap + 1, rights + level);
            else lefts = std::min(cap + 1, lefts + level);
            if (depth == 0) level = grow(level, s);
            else if (depth % 2 == 1) level = grow(level, r - 1);
            else level = grow(level, s - 1);
        }
        need_left = std::max(need_left, lefts);
        need_right = std::max(need_right, rights);
    }
    return {need_left, need_right};
}

// One bounded-backtracking run at fixed sizes. Candidate pairs are scanned in
// the preference order given by the two permutations; a pair is admissible
// when both degrees have room and the endpoints are at distance >= 2g-1
// (otherwise the new edge would close a short cycle).
std::optional<std::vector<std::pair<int, int>>> greedy_attempt(
    int n1, int n2, int r, int s, int min_girth, long long budget,
    const std::vector<int>& left_order, const std::vector<int>& right_order) {
    const long long total_codes = static_cast<long long>(n1) * n2;
    const int target = n1 * r;
    const int blocked_depth = min_girth - 2;  // block when dist(u,v) <= this

    std::vector<std::vector<int>> adj1(n1), adj2(n2);
    std::vector<int> deg1(n1, 0), deg2(n2, 0);
    std::vector<int> mark(n1 + n2, -1);
    std::vector<int> frontier, next_front;
    int generation = 0;

    auto blocked = [&](int u, int v) {
        if (blocked_depth <= 0) return false;
        ++generation;
        frontier.assign(1, u);
        mark[u] = generation;
        for (int depth = 0; depth < blocked_depth && !frontier.empty(); ++depth) {
            next_front.clear();
            for (int code : frontier) {
                if (code < n1) {
                    for (int y : adj1[code]) {
                        if (mark[n1 + y] == generation) continue;
                        mark[n1 + y] = generation;
                        if (y == v) return true;
                        next_front.push_back(n1 + y);
                    }
                } else {
                    for (int x : adj2[code - n1]) {
                        if (mark[x] == generation) continue;
                        mark[x] = generation;
                        next_front.push_back(x);
                    }
                }
            }
            frontier.swap(next_front);
        }
        return false;
    };

    struct Frame {
        long long code;
        int u, v;
    };
    std::vector<Frame> stack;
    stack.reserve(target);

    auto next_candidate = [&](long long after) -> std::optional<Frame> {
        long long code = after + 1;
        while (code < total_codes) {
            int pu = static_cast<int>(code / n2);
            int u = left_order[pu];
            if (deg1[u] == r) {
                code = static_cast<long long>(pu + 1) * n2;
                continue;
            }
            int v = right_order[static_cast<int>(code % n2)];
            if (deg2[v] < s && !blocked(u, v)) return Frame{code, u, v};
            ++code;
        }
        return std::nullopt;
    };

    long long cursor = -1;
    while (static_cast<int>(stack.size()) < target) {
        std::optional<Frame> cand = next_candidate(cursor);
        if (cand) {
            adj1[cand->u].push_back(cand->v);
            adj2[cand->v].push_back(cand->u);
            ++deg1[cand->u];
            ++deg2[cand->v];
            stack.push_back(*cand);
            cursor = -1;
        } else {
            if (stack.empty() || --budget < 0) return std::nullopt;
            Frame f = stack.back();
            stack.pop_back();
            adj1[f.u].pop_back();  // edges are removed in reverse insertion order
            adj2[f.v].pop_back();
            --deg1[f.u];
            --deg2[f.v];
            cursor = f.code;
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stack.size());
    for (const Frame& f : stack) edges.push_back({f.u, f.v});
    std::sort(edges.begin(), edges.end());
    return edges;
}

BipartiteGraph greedy_biregular(int r, int s, int g, long long size_cap, unsigned seed) {
    const long long g1 = std::gcd(r, s);
    const long long unit1 = s / g1, unit2 = r / g1;
    auto [need1, need2] = moore_bounds(r, s, g, size_cap);
    long long t = 1;
    t = std::max(t, (need1 + unit1 - 1) / unit1);
    t = std::max(t, (need2 + unit2 - 1) / unit2);

    const int attempts_per_size = 6;
    const long long budget = 200000;
    for (long long size = t; size * (unit1 + unit2) <= size_cap && size * unit1 < (1LL << 30) &&
                             size * unit2 < (1LL << 30);
         size *= 2) {
        int n1 = static_cast<int>(size * unit1);
        int n2 = static_cast<int>(size * unit2);
        for (int attempt = 0; attempt < attempts_per_size; ++attempt) {
            std::vector<int> lo(n1), ro(n2);
            std::iota(lo.begin(), lo.end(), 0);
            std::iota(ro.begin(), ro.end(), 0);
            if (attempt > 0) {
                std::mt19937 rng(seed * 7919u + static_cast<unsigned>(attempt) * 104729u +
                                 static_cast<unsigned>(size));
                std::shuffle(lo.begin(), lo.end(), rng);
                std::shuffle(ro.begin(), ro.end(), rng);
            }
            auto edges = greedy_attempt(n1, n2, r, s, 2 * g, budget, lo, ro);
            if (edges) return BipartiteGraph{n1, n2, std::move(*edges)};
        }
    }
    Refusal::Requirement req;
    req.required_r = r;
    req.required_s = s;
    req.required_girth = 2LL * g;
    req.size_floor = t * (unit1 + unit2);
    req.size_cap = size_cap;
    throw Refusal("biregular_high_girth: no (" + std::to_string(r) + "," + std::to_string(s) +
                      ")-biregular graph of girth >= " + std::to_string(2 * g) +
                      " found within size cap " + std::to_string(size_cap),
                  req);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// Point-line incidence of the projective plane over F_q (q prime):
// (q+1, q+1)-biregular with girth 6.
BipartiteGraph projective_plane_incidence(int q) {
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) reps.push_back({x, y, 1});
    }
    for (int x = 0; x < q; ++x) reps.push_back({x, 1, 0});
    reps.push_back({1, 0, 0});
    const int n = static_cast<int>(reps.size());  // q^2 + q + 1
    BipartiteGraph bg;
    bg.n1 = n;
    bg.n2 = n;
    for (int p = 0; p < n; ++p) {
        for (int l = 0; l < n; ++l) {
            int dot = reps[p][0] * reps[l][0] + reps[p][1] * reps[l][1] + reps[p][2] * reps[l][2];
            if (dot % q == 0) bg.edges.push_back({p, l});
        }
    }
    return bg;
}

// Levi graph of the Cremona-Richmond configuration: pairs from a 6-set vs
// perfect matchings, (3,3)-biregular with girth 8.
BipartiteGraph cremona_richmond() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) pairs.push_back({i, j});
    }
    auto pair_index = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        for (int t = 0; t < 15; ++t) {
            if (pairs[t] == std::make_pair(i, j)) return t;
        }
        return -1;
    };
    BipartiteGraph bg;
    bg.n1 = 15;
    bg.n2 = 15;
    int line = 0;
    // Enumerate perfect matchings of {0..5}: 0 pairs with b, the remaining
    // four split in 3 ways.
    for (int b = 1; b < 6; ++b) {
        std::vector<int> rest;
        for (int x = 1; x < 6; ++x) {
            if (x != b) rest.push_back(x);
        }
        for (int c = 1; c < 4; ++c) {
            int others[2];
            int oi = 0;
            for (int x = 1; x < 4; ++x) {
                if (x != c) others[oi++] = x;
            }
            bg.edges.push_back({pair_index(0, b), line});
            bg.edges.push_back({pair_index(rest[0], rest[c]), line});
            bg.edges.push_back({pair_index(rest[others[0]], rest[others[1]]), line});
            ++line;
        }
    }
    return bg;
}

void check_biregular(const BipartiteGraph& b, int r, int s, const std::string& what) {
    std::vector<int> deg1(b.n1, 0), deg2(b.n2, 0);
    for (auto [u, v] : b.edges) {
        ++deg1[u];
        ++deg2[v];
    }
    for (int d : deg1) {
        if (d != r) throw ContractViolation(what + ": left degree mismatch");
    }
    for (int d : deg2) {
        if (d != s) throw ContractViolation(what + ": right degree mismatch");
    }
}

BipartiteGraph flip_sides(const BipartiteGraph& b) {
    BipartiteGraph out;
    out.n1 = b.n2;
    out.n2 = b.n1;
    out.edges.reserve(b.edges.size());
    for (auto [u, v] : b.edges) out.edges.push_back({v, u});
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace

BipartiteGraph biregular_high_girth(int r, int s, int g, long long size_cap, unsigned seed) {
    if (r < 1 || s < 1 || g < 1) {
        throw ContractViolation("biregular_high_girth: degrees and girth parameter must be >= 1");
    }
    // The problem is symmetric under swapping sides.
    bool swapped = false;
    if (r < s) {
        std::swap(r, s);
        swapped = true;
    }

    BipartiteGraph result;
    if (s == 1) {
        // A star: one left vertex of degree r, r right leaves of degree 1.
        // Forests have infinite girth, so any g is satisfied.
        result.n1 = 1;
        result.n2 = r;
        for (int v = 0; v < r; ++v) result.edges.push_back({0, v});
    } else if (r == 2 && s == 2) {
        int t = std::max(g, 2);
        result.n1 = t;
        result.n2 = t;
        for (int i = 0; i < t; ++i) {
            result.edges.push_back({i, i});
            result.edges.push_back({i, (i + 1) % t});
        }
        std::sort(result.edges.begin(), result.edges.end());
    } else if (g <= 2) {
        // Complete bipartite: girth 4 suffices.
        result.n1 = s;
        result.n2 = r;
        for (int u = 0; u < s; ++u) {
            for (int v = 0; v < r; ++v) result.edges.push_back({u, v});
        }
    } else if (s == 2 && g == 3) {
        // Subdivided K_{r+1}: girth 6.
        result.n1 = r + 1;
        int mid = 0;
        for (int i = 0; i <= r; ++i) {
            for (int j = i + 1; j <= r; ++j) {
                result.edges.push_back({i, mid});
                result.edges.push_back({j, mid});
                ++mid;
            }
        }
        result.n2 = mid;
        std::sort(result.edges.begin(), result.edges.end());
    } else if (s == 2 && g == 4) {
        // Subdivided K_{r,r}: girth 8.
        result.n1 = 2 * r;
        int mid = 0;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                result.edges.push_back({i, mid});
                result.edges.push_back({r + j, mid});
                ++mid;
            }
        }
        result.n2 = mid;
        std::sort(result.edges.begin(), result.edges.end());
    } else if (r == s && g == 3 && is_prime(r - 1)) {
        result = projective_plane_incidence(r - 1);
    } else if (r == 3 && s == 3 && g == 4) {
        result = cremona_richmond();
    } else {
        result = greedy_biregular(r, s, g, size_cap, seed);
    }

    if (static_cast<long long>(result.n1) + result.n2 > size_cap) {
        Refusal::Requirement req;
        req.required_r = r;
        req.required_s = s;
        req.required_girth = 2LL * g;
        req.size_floor = static_cast<long long>(result.n1) + result.n2;
        req.size_cap = size_cap;
        throw Refusal("biregular_high_girth: smallest known construction exceeds size cap", req);
    }
    check_biregular(result, r, s, "biregular_high_girth");
    // Forests pass vacuously (infinite girth); everything else must clear 2g.
    if (bipartite_girth(result) < Girth::of(2 * g)) {
        throw ContractViolation("biregular_high_girth: construction girth below 2g");
    }
    if (swapped) result = flip_sides(result);
    return result;
}

// ---------------------------------------------------------------------------
// Lifts
// ---------------------------------------------------------------------------

ColoredBipartite lift_right_cyclic(const BipartiteGraph& base, int s) {
    // t = s copies. Edges at each right vertex are enumerated in input order;
    // the i-th edge (u,v) in copy j attaches the right vertex (v,j) to the
    // left vertex (u, (j+i) mod s) and takes b = (j+i) mod s. Every right
    // vertex then sees all s b-colors; every left vertex sees exactly one.
    std::vector<std::vector<int>> incident(base.n2);
    for (int e = 0; e < static_cast<int>(base.edges.size()); ++e) {
        incident[base.edges[e].second].push_back(e);
    }
    ColoredBipartite out;
    out.n1 = s * base.n1;
    out.n2 = s * base.n2;
    out.q1 = 1;
    out.q2 = s;
    for (int j = 0; j < s; ++j) {
        for (int v = 0; v < base.n2; ++v) {
            for (int i = 0; i < static_cast<int>(incident[v].size()); ++i) {
                int u = base.edges[incident[v][i]].first;
                int shift = (j + i) % s;
                out.edges.push_back({shift * base.n1 + u, j * base.n2 + v, 0, shift});
            }
        }
    }
    // Degrees carry over from the base graph (biregular by contract).
    out.d1 = base.n1 > 0 ? static_cast<int>(static_cast<long long>(out.edges.size()) / out.n1) : 0;
    out.d2 = base.n2 > 0 ? static_cast<int>(static_cast<long long>(out.edges.size()) / out.n2) : 0;
    out.declared_girth = cbg_girth(out);
    return out;
}

ColoredBipartite lift_left_cyclic(const ColoredBipartite& h, int r) {
    // r copies. Edges at each left vertex are enumerated in input order; the
    // i-th edge (u,v) in copy j attaches left (u,j) to right (v, (j+i) mod r)
    // with a = (j+i) mod r, b inherited.
    std::vector<std::vector<int>> incident(h.n1);
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        incident[h.edges[e].left].push_back(e);
    }
    ColoredBipartite out;
    out.n1 = r * h.n1;
    out.n2 = r * h.n2;
    out.q1 = r;
    out.q2 = h.q2;
    for (int j = 0; j < r; ++j) {
        for (int u = 0; u < h.n1; ++u) {
            for (int i = 0; i < static_cast<int>(incident[u].size()); ++i) {
                const ColoredEdge& e = h.edges[incident[u][i]];
                int shift = (j + i) % r;
                out.edges.push_back({j * h.n1 + u, shift * h.n2 + e.right, shift, e.b});
            }
        }
    }
    out.d1 = out.n1 > 0 ? static_cast<int>(static_cast<long long>(out.edges.size()) / out.n1) : 0;
    out.d2 = out.n2 > 0 ? static_cast<int>(static_cast<long long>(out.edges.size()) / out.n2) : 0;
    out.declared_girth = cbg_girth(out);
    return out;
}

ColoredBipartite color_lift(const BipartiteGraph& b, int r, int s) {
    std::vector<int> deg1(b.n1, 0), deg2(b.n2, 0);
    for (auto [u, v] : b.edges) {
        ++deg1[u];
        ++deg2[v];
    }
    for (int d : deg1) {
        if (d != r) throw ContractViolation("color_lift: base left degree must equal r");
    }
    for (int d : deg2) {
        if (d != s) throw ContractViolation("color_lift: base right degree must equal s");
    }
    ColoredBipartite stage1 = lift_right_cyclic(b, s);
    return lift_left_cyclic(stage1, r);
}

// ---------------------------------------------------------------------------
// verify_colored / construct_cbg
// ---------------------------------------------------------------------------

std::vector<std::string> verify_colored(const ColoredBipartite& b, int m1, int k2) {
    std::vector<std::string> bad;
    if (b.d1 != m1) bad.push_back("left degree is not m1");
    if (b.d2 != k2) bad.push_back("right degree is not k2");
    if (b.q1 != m1 || b.q2 != k2) bad.push_back("color palettes are not [m1] x [k2]");
    if (static_cast<long long>(b.n1) * b.d1 != static_cast<long long>(b.n2) * b.d2) {
        bad.push_back("n1*d1 != n2*d2");
    }
    if (b.declared_girth.finite && b.declared_girth.length % 2 != 0) {
        bad.push_back("declared girth is odd");
    }

    std::vector<int> deg1(b.n1, 0), deg2(b.n2, 0);
    std::vector<std::set<int>> a_left(b.n1), b_left(b.n1), a_right(b.n2), b_right(b.n2);
    bool range_ok = true;
    for (const ColoredEdge& e : b.edges) {
        if (e.left < 0 || e.left >= b.n1 || e.right < 0 || e.right >= b.n2) {
            bad.push_back("edge endpoint out of range");
            range_ok = false;
            break;
        }
        if (e.a < 0 || e.a >= m1 || e.b < 0 || e.b >= k2) {
            bad.push_back("edge color out of range");
            range_ok = false;
            break;
        }
        ++deg1[e.left];
        ++deg2[e.right];
        a_left[e.left].insert(e.a);
        b_left[e.left].insert(e.b);
        a_right[e.right].insert(e.a);
        b_right[e.right].insert(e.b);
    }
    if (!range_ok) return bad;

    for (int u = 0; u < b.n1; ++u) {
        if (deg1[u] != m1) {
            bad.push_back("left vertex " + std::to_string(u) + " has degree " +
                          std::to_string(deg1[u]));
            break;
        }
    }
    for (int v = 0; v < b.n2; ++v) {
        if (deg2[v] != k2) {
            bad.push_back("right vertex " + std::to_string(v) + " has degree " +
                          std::to_string(deg2[v]));
            break;
        }
    }
    for (int v = 0; v < b.n2; ++v) {
        if (static_cast<int>(b_right[v].size()) != k2) {
            bad.push_back("right vertex " + std::to_string(v) + " misses a b-color");
            break;
        }
    }
    for (int u = 0; u < b.n1; ++u) {
        if (static_cast<int>(a_left[u].size()) != m1) {
            bad.push_back("left vertex " + std::to_string(u) + " misses an a-color");
            break;
        }
    }
    for (int v = 0; v < b.n2; ++v) {
        if (a_right[v].size() != 1) {
            bad.push_back("right vertex " + std::to_string(v) + " sees multiple a-colors");
            break;
        }
    }
    for (int u = 0; u < b.n1; ++u) {
        if (b_left[u].size() != 1) {
            bad.push_back("left vertex " + std::to_string(u) + " sees multiple b-colors");
            break;
        }
    }
    if (cbg_girth(b) < b.declared_girth) {
        bad.push_back("actual girth is below the declared girth");
    }
    return bad;
}

ColoredBipartite construct_cbg(int r, int s, int g, long long size_cap, unsigned seed) {
    // The lift multiplies both sides by r*s, so the base search gets the
    // correspondingly reduced cap; the final scaffold then respects size_cap.
    long long factor = static_cast<long long>(r) * s;
    long long base_cap = size_cap / std::max(1LL, factor);
    if (base_cap < 2) {
        Refusal::Requirement req;
        req.required_r = r;
        req.required_s = s;
        req.required_girth = 2LL * g;
        req.size_floor = 2 * factor;
        req.size_cap = size_cap;
        throw Refusal("construct_cbg: size cap leaves no room for any scaffold", req);
    }
    BipartiteGraph base;
    try {
        base = biregular_high_girth(r, s, g, base_cap, seed);
    } catch (const Refusal& refusal) {
        if (!refusal.has_requirement()) throw;
        // Re-express the base-graph requirement in lifted-scaffold units.
        Refusal::Requirement req = refusal.requirement();
        req.required_r = r;
        req.required_s = s;
        req.size_floor = req.size_floor * factor;
        req.size_cap = size_cap;
        throw Refusal(std::string("construct_cbg: ") + refusal.what(), req);
    }
    ColoredBipartite lifted = color_lift(base, r, s);
    if (lifted.declared_girth < Girth::of(2 * g)) {
        throw ContractViolation("construct_cbg: lift girth fell below 2g");
    }
    std::vector<std::string> report = verify_colored(lifted, r, s);
    if (!report.empty()) {
        throw ContractViolation("construct_cbg: lifted scaffold failed verification: " +
                                report.front());
    }
    return lifted;
}

}  // namespace gaptensor
