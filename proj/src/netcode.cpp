#include "gaptensor/netcode.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "gaptensor/errors.hpp"

namespace gaptensor {

namespace {

constexpr long kExactBitBudget = 1L << 26;  // cap on big-integer comparison size

// ---------------------------------------------------------------------------
// Exact entropy comparisons
// ---------------------------------------------------------------------------

// Sign of (sum_i a_i * log2(n_i)) - r with integer a_i, integer n_i >= 1.
// Exact: clears denominators and compares big-integer powers. Equality across
// the power-of-two boundary is impossible unless every n_i is a power of two,
// which callers handle on a fast path first.
int compare_log_form(const std::vector<std::pair<BigInt, BigInt>>& terms, const Rational& r) {
    Rational rc = r;
    rc.canonicalize();
    const BigInt& p = rc.get_num();
    const BigInt& qd = rc.get_den();

    // Estimated result size, to refuse rather than thrash.
    double bits = 0;
    for (const auto& [a, n] : terms) {
        if (n <= 1) continue;
        double an = std::abs(a.get_d()) * qd.get_d();
        bits += an * (mpz_sizeinbase(n.get_mpz_t(), 2));
    }
    if (bits > static_cast<double>(kExactBitBudget)) {
        throw Refusal("entropy comparison exceeds the exact arithmetic budget");
    }

    BigInt lhs(1), rhs(1);
    for (const auto& [a, n] : terms) {
        if (n <= 1 || a == 0) continue;
        BigInt e = a * qd;
        BigInt power;
        BigInt abse = abs(e);
        if (!abse.fits_ulong_p()) {
            throw Refusal("entropy comparison exponent out of range");
        }
        mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), abse.get_ui());
        if (e > 0) lhs *= power;
        else rhs *= power;
    }
    // Compare lhs/rhs against 2^p.
    BigInt shifted;
    if (p >= 0) {
        if (!p.fits_ulong_p()) return -1;  // rhs astronomically large
        mpz_mul_2exp(shifted.get_mpz_t(), rhs.get_mpz_t(), p.get_ui());
        return cmp(lhs, shifted);
    }
    BigInt absp = -p;
    if (!absp.fits_ulong_p()) return 1;
    mpz_mul_2exp(shifted.get_mpz_t(), lhs.get_mpz_t(), absp.get_ui());
    return cmp(shifted, rhs);
}

// Certified dyadic bounds lo <= log2(n) <= hi with hi - lo = 2^-frac_bits.
// Interval squaring with outward rounding; precision grows until every
// emitted bit is unambiguous (n not a power of two has no dyadic log).
std::pair<Rational, Rational> log2_bounds(const BigInt& n, int frac_bits) {
    if (n <= 0) throw ContractViolation("log2_bounds: argument must be positive");
    if (is_power_of_two(n)) {
        Rational exact(exact_log2(n));
        return {exact, exact};
    }
    const long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
    for (int prec = frac_bits + 64;; prec *= 2) {
        // Mantissas in [2^prec, 2^(prec+1)), lo rounding down, hi up.
        BigInt lo, hi;
        if (e >= prec) {
            mpz_fdiv_q_2exp(lo.get_mpz_t(), n.get_mpz_t(), e - prec);
            mpz_cdiv_q_2exp(hi.get_mpz_t(), n.get_mpz_t(), e - prec);
        } else {
            mpz_mul_2exp(lo.get_mpz_t(), n.get_mpz_t(), prec - e);
            hi = lo;
        }
        BigInt one_shift;
        mpz_ui_pow_ui(one_shift.get_mpz_t(), 2, prec);
        BigInt two_shift = 2 * one_shift;

        BigInt frac_num(0);
        bool ambiguous = false;
        for (int bit = 0; bit < frac_bits; ++bit) {
            lo = lo * lo;
            mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), prec);
            hi = hi * hi;
            mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), prec);
            bool lo_high = lo >= two_shift;
            bool hi_high = hi >= two_shift;
            if (lo_high != hi_high) {
                ambiguous = true;
                break;
            }
            frac_num <<= 1;
            if (lo_high) {
                frac_num += 1;
                mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), 1);
                mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 1);
            }
        }
        if (ambiguous) continue;
        BigInt denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, frac_bits);
        Rational lo_val = Rational(e) + Rational(frac_num, denom);
        lo_val.canonicalize();
        Rational hi_val = lo_val + Rational(BigInt(1), denom);
        hi_val.canonicalize();
        return {lo_val, hi_val};
    }
}

// Symbol histogram of one arc's table (nonzero counts only).
std::vector<long long> symbol_counts(const std::vector<int>& table) {
    std::unordered_map<int, long long> freq;
    for (int s : table) ++freq[s];
    std::vector<long long> counts;
    counts.reserve(freq.size());
    for (const auto& [sym, c] : freq) counts.push_back(c);
    std::sort(counts.begin(), counts.end());
    return counts;
}

bool all_powers_of_two(const std::vector<long long>& counts) {
    for (long long c : counts) {
        if (!is_power_of_two(to_bigint(c))) return false;
    }
    return true;
}

ArcEntropy entropy_from_counts(const std::vector<long long>& counts, long long total) {
    ArcEntropy out;
    double h = 0;
    for (long long c : counts) {
        double pr = static_cast<double>(c) / static_cast<double>(total);
        h -= pr * std::log2(pr);
    }
    out.approx = h;
    if (is_power_of_two(to_bigint(total)) && all_powers_of_two(counts)) {
        // H = log2(total) - (1/total) sum c*log2(c), all terms rational here.
        Rational sum(0);
        for (long long c : counts) sum += to_rational(c) * exact_log2(to_bigint(c));
        out.bits = Rational(exact_log2(to_bigint(total))) - sum / to_rational(total);
        out.bits.canonicalize();
        out.exact = true;
    } else {
        out.bits = 0;
        out.exact = false;
    }
    return out;
}

// Decides H(counts_a) + H(counts_b) <= rhs exactly, where both histograms
// come from tables over the same uniform message space of size total.
bool entropy_sum_within(const std::vector<long long>& counts_a,
                        const std::vector<long long>& counts_b, long long total,
                        const Rational& rhs) {
    bool fast = is_power_of_two(to_bigint(total)) && all_powers_of_two(counts_a) &&
                all_powers_of_two(counts_b);
    if (fast) {
        Rational sum(0);
        for (long long c : counts_a) sum += to_rational(c) * exact_log2(to_bigint(c));
        for (long long c : counts_b) sum += to_rational(c) * exact_log2(to_bigint(c));
        Rational h = Rational(2 * exact_log2(to_bigint(total))) - sum / to_rational(total);
        return h <= rhs;
    }
    // 2*total*log2(total) - sum c*log2(c) <= total*rhs
    std::vector<std::pair<BigInt, BigInt>> terms;
    terms.push_back({to_bigint(2 * total), to_bigint(total)});
    for (long long c : counts_a) terms.push_back({to_bigint(-c), to_bigint(c)});
    for (long long c : counts_b) terms.push_back({to_bigint(-c), to_bigint(c)});
    return compare_log_form(terms, to_rational(total) * rhs) <= 0;
}

// ---------------------------------------------------------------------------
// Causality closure
// ---------------------------------------------------------------------------

struct Closure {
    long long message_total = 0;
    std::vector<std::vector<int>> gid;  // per vertex, partition id per message
    std::vector<int> groups;            // per vertex, group count
    std::vector<char> admitted;         // per arc
    std::vector<int> order;

    // Splits v's partition by an additional observed key.
    template <typename KeyFn>
    void refine(int v, KeyFn&& key) {
        std::vector<int>& G = gid[v];
        if (G.empty()) G.assign(message_total, 0);
        std::unordered_map<unsigned long long, int> remap;
        remap.reserve(static_cast<std::size_t>(groups[v]) * 2 + 8);
        int next = 0;
        for (long long m = 0; m < message_total; ++m) {
            unsigned long long packed =
                (static_cast<unsigned long long>(G[m]) << 32) |
                static_cast<unsigned long long>(static_cast<unsigned>(key(m)));
            auto [it, inserted] = remap.try_emplace(packed, next);
            if (inserted) ++next;
            G[m] = it->second;
        }
        groups[v] = next;
    }

    // True when `table` is constant on each group of v's partition.
    bool measurable(int v, const std::vector<int>& table) const {
        const std::vector<int>& G = gid[v];
        if (G.empty()) {
            for (int s : table) {
                if (s != table[0]) return false;
            }
            return true;
        }
        std::vector<int> rep(groups[v], -1);
        for (long long m = 0; m < message_total; ++m) {
            int& r = rep[G[m]];
            if (r == -1) r = table[m];
            else if (r != table[m]) return false;
        }
        return true;
    }
};

}  // namespace

ArcEntropy entropy_of_arc(const NCSolution& n, int arc) {
    if (arc < 0 || arc >= static_cast<int>(n.coding_tables.size())) {
        throw ContractViolation("entropy_of_arc: arc index out of range");
    }
    const std::vector<int>& table = n.coding_tables[arc];
    return entropy_from_counts(symbol_counts(table), static_cast<long long>(table.size()));
}

NCReport verify_nc(const OrientedGraph& g, const NCSolution& n, long long message_cap) {
    require_valid(g.base, "verify_nc");
    const int vertex_count = g.base.vertex_count;
    const int arcs = g.arc_count();
    const int k = static_cast<int>(g.base.commodities.size());

    NCReport report;
    report.rate = 0;
    report.rate_exact = true;

    // Structural checks first; nothing else is meaningful if these fail.
    if (static_cast<int>(n.message_sizes.size()) != k) {
        report.violations.push_back("message size list length mismatch");
        return report;
    }
    if (static_cast<int>(n.arc_alphabets.size()) != arcs ||
        static_cast<int>(n.coding_tables.size()) != arcs) {
        report.violations.push_back("arc list length mismatch");
        return report;
    }
    if (n.scale_b <= 0) {
        report.violations.push_back("scale b must be positive");
        return report;
    }
    long long total = 1;
    for (long long s : n.message_sizes) {
        if (s < 1) {
            report.violations.push_back("message sizes must be >= 1");
            return report;
        }
        if (total > message_cap / s) {
            throw Refusal("verify_nc: message space exceeds cap " + std::to_string(message_cap));
        }
        total *= s;
    }
    report.message_total = total;
    for (int a = 0; a < arcs; ++a) {
        if (n.arc_alphabets[a] < 1 || n.arc_alphabets[a] > (1LL << 31)) {
            report.violations.push_back("arc " + std::to_string(a) + " has a bad alphabet size");
            return report;
        }
        if (static_cast<long long>(n.coding_tables[a].size()) != total) {
            report.violations.push_back("arc " + std::to_string(a) + " table size mismatch");
            return report;
        }
        for (int s : n.coding_tables[a]) {
            if (s < 0 || s >= n.arc_alphabets[a]) {
                report.violations.push_back("arc " + std::to_string(a) +
                                            " emits a symbol outside its alphabet");
                return report;
            }
        }
    }

    // Message digit extraction (commodity 0 is the least significant digit).
    std::vector<long long> stride(k, 1);
    for (int i = 1; i < k; ++i) stride[i] = stride[i - 1] * n.message_sizes[i - 1];
    auto digit = [&](long long m, int i) {
        return static_cast<int>((m / stride[i]) % n.message_sizes[i]);
    };

    // Causality: start from the source messages available at each vertex and
    // admit arcs whose tables are measurable there, propagating to heads.
    Closure cl;
    cl.message_total = total;
    cl.gid.assign(vertex_count, {});
    cl.groups.assign(vertex_count, 1);
    cl.admitted.assign(arcs, 0);
    for (int i = 0; i < k; ++i) {
        if (n.message_sizes[i] > 1) {
            int v = g.base.commodities[i].source;
            cl.refine(v, [&](long long m) { return digit(m, i); });
        }
    }
    std::deque<int> work;
    std::vector<char> queued(vertex_count, 1);
    for (int v = 0; v < vertex_count; ++v) work.push_back(v);
    std::vector<std::vector<int>> out_arcs(vertex_count);
    for (int a = 0; a < arcs; ++a) out_arcs[g.arc_tail(a)].push_back(a);
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        queued[v] = 0;
        for (int a : out_arcs[v]) {
            if (cl.admitted[a]) continue;
            if (!cl.measurable(v, n.coding_tables[a])) continue;
            cl.admitted[a] = 1;
            cl.order.push_back(a);
            int h = g.arc_head(a);
            if (n.arc_alphabets[a] > 1) {
                cl.refine(h, [&](long long m) { return n.coding_tables[a][m]; });
            }
            if (!queued[h]) {
                queued[h] = 1;
                work.push_back(h);
            }
        }
    }
    report.admission_order = cl.order;
    for (int a = 0; a < arcs; ++a) {
        if (!cl.admitted[a]) {
            report.violations.push_back("arc " + std::to_string(a) + " (" +
                                        std::to_string(g.arc_tail(a)) + "->" +
                                        std::to_string(g.arc_head(a)) +
                                        ") is not computable causally at its tail");
        }
    }

    // Correctness: every commodity's message must be determined at its sink
    // by the admitted inputs there.
    for (int i = 0; i < k; ++i) {
        if (n.message_sizes[i] == 1) continue;
        int t = g.base.commodities[i].sink;
        if (!cl.measurable(t, [&] {
                std::vector<int> msg(total);
                for (long long m = 0; m < total; ++m) msg[m] = digit(m, i);
                return msg;
            }())) {
            report.violations.push_back("commodity " + std::to_string(i) +
                                        " is not decodable at its sink");
        }
    }

    // Capacity: per edge, H(fwd) + H(bwd) <= c(e) * b, decided exactly.
    report.entropies.resize(arcs);
    std::vector<std::vector<long long>> counts(arcs);
    for (int a = 0; a < arcs; ++a) {
        counts[a] = symbol_counts(n.coding_tables[a]);
        report.entropies[a] = entropy_from_counts(counts[a], total);
    }
    for (std::size_t e = 0; e < g.base.edges.size(); ++e) {
        Rational budget = g.base.edges[e].capacity * n.scale_b;
        if (!entropy_sum_within(counts[2 * e], counts[2 * e + 1], total, budget)) {
            report.violations.push_back("edge " + std::to_string(e) +
                                        " exceeds its entropy budget");
        }
    }

    // Rate: min_i H(S_i) / (d_i * b) with H(S_i) = log2 |M(i)|.
    bool first = true;
    for (int i = 0; i < k; ++i) {
        BigInt size(static_cast<long>(n.message_sizes[i]));
        Rational denom = g.base.commodities[i].demand * n.scale_b;
        Rational h;
        if (is_power_of_two(size)) {
            h = Rational(exact_log2(size));
        } else {
            h = log2_bounds(size, 40).first;  // certified lower bound
            report.rate_exact = false;
        }
        Rational r = h / denom;
        if (first || r < report.rate) report.rate = r;
        first = false;
    }
    if (first) report.rate = 0;

    report.valid = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// routing_as_nc
// ---------------------------------------------------------------------------

RoutingNcResult routing_as_nc(const CommodityGraph& g, const FlowSolution& f,
                              long long precision, long long message_cap) {
    require_valid(g, "routing_as_nc");
    const int m = static_cast<int>(g.edges.size());
    const int k = static_cast<int>(g.commodities.size());
    const int arcs = 2 * m;
    if (static_cast<int>(f.arc_flow.size()) != k) {
        throw ContractViolation("routing_as_nc: flow has wrong commodity count");
    }
    if (f.lambda < 0) throw ContractViolation("routing_as_nc: negative lambda");

    // Feasibility: nonnegative flows, conservation, demand at sources,
    // capacity respected.
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(f.arc_flow[i].size()) != arcs) {
            throw ContractViolation("routing_as_nc: flow has wrong arc count");
        }
        for (const Rational& x : f.arc_flow[i]) {
            if (x < 0) throw ContractViolation("routing_as_nc: negative arc flow");
        }
        const Commodity& c = g.commodities[i];
        for (int v = 0; v < g.vertex_count; ++v) {
            Rational net = net_outflow(g, f, i, v);
            if (v == c.source) {
                if (net != f.lambda * c.demand) {
                    throw ContractViolation("routing_as_nc: source outflow != lambda*demand");
                }
            } else if (v != c.sink && net != 0) {
                throw ContractViolation("routing_as_nc: flow not conserved");
            }
        }
    }
    for (int e = 0; e < m; ++e) {
        Rational used(0);
        for (int i = 0; i < k; ++i) used += f.arc_flow[i][2 * e] + f.arc_flow[i][2 * e + 1];
        if (used > g.edges[e].capacity) {
            throw ContractViolation("routing_as_nc: flow exceeds capacity");
        }
    }

    // b: smallest multiple of the flow denominators that is >= precision.
    BigInt denom_lcm(1);
    for (int i = 0; i < k; ++i) {
        for (const Rational& x : f.arc_flow[i]) {
            Rational canon = x;
            canon.canonicalize();
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                    canon.get_den().get_mpz_t());
        }
    }
    if (precision < 1) precision = 1;
    BigInt mult = (BigInt(static_cast<long>(precision)) + denom_lcm - 1) / denom_lcm;
    BigInt b_big = denom_lcm * mult;
    if (!b_big.fits_slong_p()) {
        throw Refusal("routing_as_nc: fragment scale does not fit a machine word");
    }
    const long long b = b_big.get_si();
    Rational b_rat(static_cast<long>(b));

    // Path decomposition per commodity; each path carries value*b fragments.
    std::vector<long long> frag_count(k, 0);
    struct PathRec {
        int commodity;
        std::vector<int> path_arcs;
        long long count;
        long long offset;
    };
    std::vector<PathRec> paths;
    long long total_bits = 0;
    const long long bit_cap = 62;
    for (int i = 0; i < k; ++i) {
        // total_bits is commodity i's base offset for the whole while loop.
        std::vector<Rational> res = f.arc_flow[i];
        const Commodity& c = g.commodities[i];
        Rational remaining = f.lambda * c.demand;
        while (remaining > 0) {
            // BFS over positive-residual arcs; conservation guarantees the
            // sink stays reachable while outflow remains.
            std::vector<int> parent_arc(g.vertex_count, -1);
            std::vector<char> seen(g.vertex_count, 0);
            std::deque<int> queue{c.source};
            seen[c.source] = 1;
            while (!queue.empty() && !seen[c.sink]) {
                int v = queue.front();
                queue.pop_front();
                for (int a = 0; a < arcs; ++a) {
                    if (res[a] <= 0) continue;
                    const Edge& ed = g.edges[a / 2];
                    int tail = (a % 2 == 0) ? ed.u : ed.v;
                    int head = (a % 2 == 0) ? ed.v : ed.u;
                    if (tail != v || seen[head]) continue;
                    seen[head] = 1;
                    parent_arc[head] = a;
                    queue.push_back(head);
                }
            }
            if (!seen[c.sink]) {
                throw ContractViolation("routing_as_nc: path decomposition got stuck");
            }
            std::vector<int> path_arcs;
            Rational value = remaining;
            for (int v = c.sink; v != c.source;) {
                int a = parent_arc[v];
                path_arcs.push_back(a);
                value = std::min(value, res[a]);
                const Edge& ed = g.edges[a / 2];
                v = (a % 2 == 0) ? ed.u : ed.v;
            }
            std::reverse(path_arcs.begin(), path_arcs.end());
            for (int a : path_arcs) res[a] -= value;
            remaining -= value;

            Rational count_rat = value * b_rat;
            count_rat.canonicalize();
            if (count_rat.get_den() != 1 || !count_rat.get_num().fits_slong_p()) {
                throw ContractViolation("routing_as_nc: fragment count not integral");
            }
            long long count = count_rat.get_num().get_si();
            paths.push_back({i, std::move(path_arcs), count, total_bits + frag_count[i]});
            frag_count[i] += count;
        }
        total_bits += frag_count[i];
        if (total_bits > bit_cap) {
            throw Refusal("routing_as_nc: fragment precision exceeds the message-space cap");
        }
    }
    if ((1LL << total_bits) > message_cap) {
        throw Refusal("routing_as_nc: message space exceeds cap " + std::to_string(message_cap));
    }

    // Per-arc global bit positions, in peel order.
    std::vector<std::vector<long long>> arc_bits(arcs);
    for (const PathRec& p : paths) {
        for (int a : p.path_arcs) {
            for (long long t = 0; t < p.count; ++t) arc_bits[a].push_back(p.offset + t);
        }
    }

    RoutingNcResult out;
    out.nc.scale_b = b_rat;
    out.nc.message_sizes.resize(k);
    for (int i = 0; i < k; ++i) out.nc.message_sizes[i] = 1LL << frag_count[i];
    const long long total = 1LL << total_bits;
    out.nc.arc_alphabets.resize(arcs);
    out.nc.coding_tables.assign(arcs, {});
    for (int a = 0; a < arcs; ++a) {
        const std::vector<long long>& bits = arc_bits[a];
        out.nc.arc_alphabets[a] = 1LL << bits.size();
        std::vector<int>& table = out.nc.coding_tables[a];
        table.resize(total);
        for (long long msg = 0; msg < total; ++msg) {
            int sym = 0;
            for (std::size_t j = 0; j < bits.size(); ++j) {
                sym |= static_cast<int>((msg >> bits[j]) & 1) << j;
            }
            table[msg] = sym;
        }
    }
    out.used_arc_caps.resize(m);
    for (int e = 0; e < m; ++e) {
        out.used_arc_caps[e] = {Rational(static_cast<long>(arc_bits[2 * e].size())) / b_rat,
                                Rational(static_cast<long>(arc_bits[2 * e + 1].size())) / b_rat};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

OrientedGraph tensor_forward_orientation(const TensorResult& t) {
    std::vector<std::pair<Rational, Rational>> caps(t.graph.edges.size());
    for (std::size_t e = 0; e < t.graph.edges.size(); ++e) {
        caps[e] = {t.graph.edges[e].capacity, Rational(0)};
    }
    return orient_by_coding(t.graph, caps);
}

NCSolution compose_nc(const NCSolution& n1, const NCSolution& n2, const ColoredBipartite& b,
                      const TensorResult& t, long long message_cap) {
    // Both inputs must verify on the graphs the tensor was built from.
    NCReport r1 = verify_nc(t.g1p, n1, message_cap);
    if (!r1.valid) {
        throw ContractViolation("compose_nc: first solution does not verify: " +
                                (r1.violations.empty() ? "?" : r1.violations.front()));
    }
    NCReport r2 = verify_nc(t.g2p, n2, message_cap);
    if (!r2.valid) {
        throw ContractViolation("compose_nc: second solution does not verify: " +
                                (r2.violations.empty() ? "?" : r2.violations.front()));
    }
    // Every carried symbol must fit its carrier's message space (padding up
    // is the identity embedding).
    for (const ColoredEdge& e : b.edges) {
        if (n2.message_sizes[e.b] < n1.arc_alphabets[e.a]) {
            throw ContractViolation(
                "compose_nc: alphabet mismatch beyond padding on scaffold edge (a=" +
                std::to_string(e.a) + ", b=" + std::to_string(e.b) + ")");
        }
    }

    const int k1 = static_cast<int>(t.g1p.base.commodities.size());
    const int k2 = static_cast<int>(t.g2p.base.commodities.size());
    const int copies1 = t.cert.n1;
    const int copies2 = t.cert.n2;

    // Global message space: one G1 message block per left copy, copy-major.
    long long m1_total = 1;
    for (long long s : n1.message_sizes) m1_total *= s;
    long long total = 1;
    for (int y = 0; y < copies1; ++y) {
        if (total > message_cap / m1_total) {
            throw Refusal("compose_nc: composed message space exceeds cap");
        }
        total *= m1_total;
    }

    // Strides of n1's own message space.
    std::vector<long long> stride1(k1, 1);
    for (int i = 1; i < k1; ++i) stride1[i] = stride1[i - 1] * n1.message_sizes[i - 1];
    std::vector<long long> stride2(k2, 1);
    for (int i = 1; i < k2; ++i) stride2[i] = stride2[i - 1] * n2.message_sizes[i - 1];

    // m1_of[y][m]: the G1 message index held by left copy y inside global m.
    // Copy y occupies the y-th base-m1_total digit.
    if (static_cast<long long>(copies1) * total > (1LL << 27)) {
        throw Refusal("compose_nc: composed table precomputation exceeds memory budget");
    }
    std::vector<std::vector<int>> m1_of(copies1, std::vector<int>(total));
    {
        long long block = 1;
        for (int y = 0; y < copies1; ++y) {
            for (long long m = 0; m < total; ++m) {
                m1_of[y][m] = static_cast<int>((m / block) % m1_total);
            }
            block *= m1_total;
        }
    }

    // partner[j][k] = left copy whose arc p_j is carried by commodity k at
    // right copy j.
    std::vector<std::vector<int>> partner(copies2, std::vector<int>(k2, -1));
    for (int y = 0; y < copies1; ++y) {
        for (int p = 0; p < static_cast<int>(t.cert.copy_maps[y].size()); ++p) {
            auto [j, kk] = t.cert.copy_maps[y][p];
            if (j >= 0) partner[j][kk] = y;
        }
    }

    NCSolution out;
    out.message_sizes.reserve(static_cast<std::size_t>(copies1) * k1);
    for (int y = 0; y < copies1; ++y) {
        for (int i = 0; i < k1; ++i) out.message_sizes.push_back(n1.message_sizes[i]);
    }

    const int tensor_edges = static_cast<int>(t.graph.edges.size());
    out.arc_alphabets.assign(2 * tensor_edges, 1);
    out.coding_tables.assign(2 * tensor_edges, {});

    // Process edges grouped by right copy so the copy's composed G2 message
    // is computed once.
    std::vector<int> m2_of(total);
    int edge_idx = 0;
    while (edge_idx < tensor_edges) {
        const int j = t.cert.edge_origin[edge_idx].right_copy;
        const int p = t.cert.right_a_color[j];
        const std::vector<int>& tb1 = n1.coding_tables[p];
        for (long long m = 0; m < total; ++m) {
            long long m2 = 0;
            for (int kk = 0; kk < k2; ++kk) {
                int y = partner[j][kk];
                m2 += static_cast<long long>(tb1[m1_of[y][m]]) * stride2[kk];
            }
            m2_of[m] = static_cast<int>(m2);
        }
        for (; edge_idx < tensor_edges && t.cert.edge_origin[edge_idx].right_copy == j;
             ++edge_idx) {
            const int a = t.cert.edge_origin[edge_idx].g2_arc;
            const std::vector<int>& tb2 = n2.coding_tables[a];
            std::vector<int>& fwd = out.coding_tables[2 * edge_idx];
            fwd.resize(total);
            for (long long m = 0; m < total; ++m) fwd[m] = tb2[m2_of[m]];
            out.arc_alphabets[2 * edge_idx] = n2.arc_alphabets[a];
            // Backward arcs carry nothing.
            out.coding_tables[2 * edge_idx + 1].assign(total, 0);
            out.arc_alphabets[2 * edge_idx + 1] = 1;
        }
    }

    // scale b: smallest value making every edge's entropy budget tight
    // enough, from the measured composed entropies.
    Rational best_b(1);
    for (int e = 0; e < tensor_edges; ++e) {
        std::vector<long long> cf = symbol_counts(out.coding_tables[2 * e]);
        ArcEntropy h = entropy_from_counts(cf, total);
        Rational hv;
        if (h.exact) {
            hv = h.bits;
        } else {
            // Certified upper bound: log2(total).hi - (1/total)*sum c*log2(c).lo
            Rational upper = log2_bounds(BigInt(static_cast<long>(total)), 40).second;
            Rational lowsum(0);
            for (long long c : cf) {
                lowsum += Rational(static_cast<long>(c)) *
                          log2_bounds(BigInt(static_cast<long>(c)), 40).first;
            }
            hv = upper - lowsum / Rational(static_cast<long>(total));
        }
        if (hv <= 0) continue;
        Rational need = hv / t.graph.edges[e].capacity;
        if (need > best_b) best_b = need;
    }
    out.scale_b = best_b;
    return out;
}

}  // namespace gaptensor
