#include "gaptensor/io.hpp"

#include <fstream>
#include <sstream>

#include "gaptensor/errors.hpp"

namespace gaptensor {

namespace {

struct TokenLine {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
    std::vector<TokenLine> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        TokenLine line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    if (line > 0) throw ParseError(msg, line);
    throw ParseError(msg);
}

long long parse_int(const TokenLine& line, std::size_t idx) {
    if (idx >= line.tokens.size()) fail(line.number, "missing integer field");
    const std::string& s = line.tokens[idx];
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) fail(line.number, "bad integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(line.number, "bad integer '" + s + "'");
    }
}

Rational parse_rat(const TokenLine& line, std::size_t idx) {
    if (idx >= line.tokens.size()) fail(line.number, "missing rational field");
    try {
        return parse_rational(line.tokens[idx]);
    } catch (...) {
        fail(line.number, "bad rational '" + line.tokens[idx] + "'");
    }
}

void expect_tokens(const TokenLine& line, std::size_t count) {
    if (line.tokens.size() != count) {
        fail(line.number, "expected " + std::to_string(count) + " fields, got " +
                              std::to_string(line.tokens.size()));
    }
}

int checked_vertex(const TokenLine& line, long long v, int n) {
    if (v < 0 || v >= n) fail(line.number, "vertex " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

// Parses the n/e/k block shared by graph and oriented-graph files; `rest`
// receives any lines after it.
CommodityGraph parse_graph_lines(const std::vector<TokenLine>& lines, std::size_t& pos) {
    if (pos >= lines.size() || lines[pos].tokens[0] != "n") {
        fail(pos < lines.size() ? lines[pos].number : 0, "expected 'n <vertex_count>'");
    }
    expect_tokens(lines[pos], 2);
    long long n = parse_int(lines[pos], 1);
    if (n < 0 || n > (1LL << 30)) fail(lines[pos].number, "bad vertex count");
    CommodityGraph g;
    g.vertex_count = static_cast<int>(n);
    ++pos;
    while (pos < lines.size()) {
        const TokenLine& line = lines[pos];
        const std::string& kind = line.tokens[0];
        if (kind == "e") {
            expect_tokens(line, 4);
            int u = checked_vertex(line, parse_int(line, 1), g.vertex_count);
            int v = checked_vertex(line, parse_int(line, 2), g.vertex_count);
            if (u == v) fail(line.number, "self-loop");
            Rational cap = parse_rat(line, 3);
            if (cap <= 0) fail(line.number, "nonpositive capacity");
            g.edges.push_back({u, v, cap});
        } else if (kind == "k") {
            expect_tokens(line, 4);
            int s = checked_vertex(line, parse_int(line, 1), g.vertex_count);
            int t = checked_vertex(line, parse_int(line, 2), g.vertex_count);
            if (s == t) fail(line.number, "degenerate commodity");
            Rational dem = parse_rat(line, 3);
            if (dem <= 0) fail(line.number, "nonpositive demand");
            g.commodities.push_back({s, t, dem});
        } else {
            break;
        }
        ++pos;
    }
    return g;
}

}  // namespace

CommodityGraph parse_graph(const std::string& text) {
    std::vector<TokenLine> lines = tokenize(text);
    std::size_t pos = 0;
    CommodityGraph g = parse_graph_lines(lines, pos);
    if (pos != lines.size()) fail(lines[pos].number, "unexpected line in graph file");
    return g;
}

std::string serialize_graph(const CommodityGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count << "\n";
    for (const Edge& e : g.edges) {
        out << "e " << e.u << " " << e.v << " " << format_rational(e.capacity) << "\n";
    }
    for (const Commodity& c : g.commodities) {
        out << "k " << c.source << " " << c.sink << " " << format_rational(c.demand) << "\n";
    }
    return out.str();
}

DualSolution parse_dual(const std::string& text, std::size_t edge_count) {
    std::vector<TokenLine> lines = tokenize(text);
    DualSolution d;
    d.weights.assign(edge_count, Rational(0));
    std::vector<char> seen(edge_count, 0);
    bool have_z = false;
    for (const TokenLine& line : lines) {
        if (line.tokens[0] == "z") {
            if (have_z) fail(line.number, "duplicate z line");
            expect_tokens(line, 2);
            d.objective = parse_rat(line, 1);
            have_z = true;
        } else if (line.tokens[0] == "w") {
            expect_tokens(line, 3);
            long long idx = parse_int(line, 1);
            if (idx < 0 || idx >= static_cast<long long>(edge_count)) {
                fail(line.number, "edge index out of range");
            }
            if (seen[idx]) fail(line.number, "duplicate weight for edge " + std::to_string(idx));
            seen[idx] = 1;
            Rational w = parse_rat(line, 2);
            if (w < 0) fail(line.number, "negative weight");
            d.weights[idx] = w;
        } else {
            fail(line.number, "unexpected line in dual file");
        }
    }
    if (!have_z) fail(0, "missing z line");
    for (std::size_t e = 0; e < edge_count; ++e) {
        if (!seen[e]) fail(0, "missing weight for edge " + std::to_string(e));
    }
    return d;
}

std::string serialize_dual(const DualSolution& d) {
    std::ostringstream out;
    out << "z " << format_rational(d.objective) << "\n";
    for (std::size_t e = 0; e < d.weights.size(); ++e) {
        out << "w " << e << " " << format_rational(d.weights[e]) << "\n";
    }
    return out.str();
}

OrientedGraph parse_oriented(const std::string& text) {
    std::vector<TokenLine> lines = tokenize(text);
    std::size_t pos = 0;
    OrientedGraph g;
    g.base = parse_graph_lines(lines, pos);
    g.arc_capacity.reserve(2 * g.base.edges.size());
    for (std::size_t e = 0; e < g.base.edges.size(); ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            if (pos >= lines.size() || lines[pos].tokens[0] != "a") {
                fail(pos < lines.size() ? lines[pos].number : 0,
                     "missing arc line for edge " + std::to_string(e));
            }
            const TokenLine& line = lines[pos];
            expect_tokens(line, 4);
            int tail = checked_vertex(line, parse_int(line, 1), g.base.vertex_count);
            int head = checked_vertex(line, parse_int(line, 2), g.base.vertex_count);
            int want_tail = (dir == 0) ? g.base.edges[e].u : g.base.edges[e].v;
            int want_head = (dir == 0) ? g.base.edges[e].v : g.base.edges[e].u;
            if (tail != want_tail || head != want_head) {
                fail(line.number, "arc endpoints do not match edge " + std::to_string(e));
            }
            Rational cap = parse_rat(line, 3);
            if (cap < 0) fail(line.number, "negative arc capacity");
            g.arc_capacity.push_back(cap);
            ++pos;
        }
        if (g.arc_capacity[2 * e] + g.arc_capacity[2 * e + 1] != g.base.edges[e].capacity) {
            fail(lines[pos - 1].number,
                 "arc capacities do not sum to the capacity of edge " + std::to_string(e));
        }
    }
    if (pos != lines.size()) fail(lines[pos].number, "unexpected line in oriented graph file");
    return g;
}

std::string serialize_oriented(const OrientedGraph& g) {
    std::ostringstream out;
    out << serialize_graph(g.base);
    for (std::size_t e = 0; e < g.base.edges.size(); ++e) {
        out << "a " << g.base.edges[e].u << " " << g.base.edges[e].v << " "
            << format_rational(g.arc_capacity[2 * e]) << "\n";
        out << "a " << g.base.edges[e].v << " " << g.base.edges[e].u << " "
            << format_rational(g.arc_capacity[2 * e + 1]) << "\n";
    }
    return out.str();
}

FlowSolution parse_flow(const std::string& text, const CommodityGraph& g) {
    std::vector<TokenLine> lines = tokenize(text);
    const int arcs = 2 * static_cast<int>(g.edges.size());
    const int k = static_cast<int>(g.commodities.size());
    FlowSolution f;
    f.arc_flow.assign(k, std::vector<Rational>(arcs, Rational(0)));
    std::vector<std::vector<char>> assigned(k, std::vector<char>(arcs, 0));
    bool have_lambda = false;
    for (const TokenLine& line : lines) {
        if (line.tokens[0] == "lambda") {
            if (have_lambda) fail(line.number, "duplicate lambda line");
            expect_tokens(line, 2);
            f.lambda = parse_rat(line, 1);
            if (f.lambda < 0) fail(line.number, "negative lambda");
            have_lambda = true;
        } else if (line.tokens[0] == "f") {
            expect_tokens(line, 5);
            long long ci = parse_int(line, 1);
            if (ci < 0 || ci >= k) fail(line.number, "commodity index out of range");
            int tail = checked_vertex(line, parse_int(line, 2), g.vertex_count);
            int head = checked_vertex(line, parse_int(line, 3), g.vertex_count);
            Rational val = parse_rat(line, 4);
            if (val < 0) fail(line.number, "negative flow value");
            // First arc with these endpoints not yet assigned for ci.
            int arc = -1;
            for (int a = 0; a < arcs; ++a) {
                const Edge& e = g.edges[a / 2];
                int at = (a % 2 == 0) ? e.u : e.v;
                int ah = (a % 2 == 0) ? e.v : e.u;
                if (at == tail && ah == head && !assigned[ci][a]) {
                    arc = a;
                    break;
                }
            }
            if (arc < 0) fail(line.number, "no unassigned arc matches this flow line");
            assigned[ci][arc] = 1;
            f.arc_flow[ci][arc] = val;
        } else {
            fail(line.number, "unexpected line in flow file");
        }
    }
    if (!have_lambda) fail(0, "missing lambda line");
    return f;
}

std::string serialize_flow(const FlowSolution& f, const CommodityGraph& g) {
    std::ostringstream out;
    out << "lambda " << format_rational(f.lambda) << "\n";
    for (std::size_t i = 0; i < f.arc_flow.size(); ++i) {
        for (std::size_t a = 0; a < f.arc_flow[i].size(); ++a) {
            if (f.arc_flow[i][a] == 0) continue;
            const Edge& e = g.edges[a / 2];
            int tail = (a % 2 == 0) ? e.u : e.v;
            int head = (a % 2 == 0) ? e.v : e.u;
            out << "f " << i << " " << tail << " " << head << " "
                << format_rational(f.arc_flow[i][a]) << "\n";
        }
    }
    return out.str();
}

ColoredBipartite parse_cbg(const std::string& text) {
    std::vector<TokenLine> lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "p") fail(0, "missing 'p cbg' header");
    const TokenLine& head = lines[0];
    expect_tokens(head, 7);
    if (head.tokens[1] != "cbg") fail(head.number, "bad problem type '" + head.tokens[1] + "'");
    ColoredBipartite b;
    long long n1 = parse_int(head, 2), n2 = parse_int(head, 3);
    long long d1 = parse_int(head, 4), d2 = parse_int(head, 5);
    if (n1 < 0 || n2 < 0 || d1 < 0 || d2 < 0 || n1 > (1 << 30) || n2 > (1 << 30)) {
        fail(head.number, "bad cbg header dimensions");
    }
    b.n1 = static_cast<int>(n1);
    b.n2 = static_cast<int>(n2);
    b.d1 = static_cast<int>(d1);
    b.d2 = static_cast<int>(d2);
    b.q1 = b.d1;
    b.q2 = b.d2;
    try {
        b.declared_girth = parse_girth(head.tokens[6]);
    } catch (...) {
        fail(head.number, "bad girth '" + head.tokens[6] + "'");
    }
    for (std::size_t pos = 1; pos < lines.size(); ++pos) {
        const TokenLine& line = lines[pos];
        if (line.tokens[0] != "e") fail(line.number, "unexpected line in cbg file");
        expect_tokens(line, 5);
        ColoredEdge e;
        e.left = checked_vertex(line, parse_int(line, 1), b.n1);
        e.right = checked_vertex(line, parse_int(line, 2), b.n2);
        long long a = parse_int(line, 3), bb = parse_int(line, 4);
        if (a < 0 || a >= b.q1) fail(line.number, "a-color out of range");
        if (bb < 0 || bb >= b.q2) fail(line.number, "b-color out of range");
        e.a = static_cast<int>(a);
        e.b = static_cast<int>(bb);
        b.edges.push_back(e);
    }
    // Biregularity fixes the edge count; a file that disagrees with its own
    // header is malformed.
    long long count = static_cast<long long>(b.edges.size());
    if (count != static_cast<long long>(b.n1) * b.d1 ||
        count != static_cast<long long>(b.n2) * b.d2) {
        fail(head.number, "edge count disagrees with the declared degrees");
    }
    return b;
}

std::string serialize_cbg(const ColoredBipartite& b) {
    std::ostringstream out;
    out << "p cbg " << b.n1 << " " << b.n2 << " " << b.d1 << " " << b.d2 << " "
        << format_girth(b.declared_girth) << "\n";
    for (const ColoredEdge& e : b.edges) {
        out << "e " << e.left << " " << e.right << " " << e.a << " " << e.b << "\n";
    }
    return out.str();
}

NCSolution parse_nc(const std::string& text, const OrientedGraph& g) {
    std::vector<TokenLine> lines = tokenize(text);
    const int arcs = g.arc_count();
    const int k = static_cast<int>(g.base.commodities.size());
    NCSolution n;
    std::size_t pos = 0;
    if (pos < lines.size() && lines[pos].tokens[0] == "b") {
        expect_tokens(lines[pos], 2);
        n.scale_b = parse_rat(lines[pos], 1);
        if (n.scale_b <= 0) fail(lines[pos].number, "nonpositive scale");
        ++pos;
    }
    for (int i = 0; i < k; ++i, ++pos) {
        if (pos >= lines.size() || lines[pos].tokens[0] != "m") {
            fail(pos < lines.size() ? lines[pos].number : 0,
                 "missing m line for commodity " + std::to_string(i));
        }
        const TokenLine& line = lines[pos];
        expect_tokens(line, 3);
        if (parse_int(line, 1) != i) fail(line.number, "m lines must be in commodity order");
        long long size = parse_int(line, 2);
        if (size < 1) fail(line.number, "message size must be >= 1");
        n.message_sizes.push_back(size);
    }
    long long total = 1;
    for (long long s : n.message_sizes) {
        if (total > (1LL << 40) / s) fail(0, "message space too large to parse");
        total *= s;
    }
    for (int a = 0; a < arcs; ++a, ++pos) {
        if (pos >= lines.size() || lines[pos].tokens[0] != "arc") {
            fail(pos < lines.size() ? lines[pos].number : 0,
                 "missing arc line for arc " + std::to_string(a));
        }
        const TokenLine& line = lines[pos];
        expect_tokens(line, 4);
        int tail = checked_vertex(line, parse_int(line, 1), g.base.vertex_count);
        int head = checked_vertex(line, parse_int(line, 2), g.base.vertex_count);
        if (tail != g.arc_tail(a) || head != g.arc_head(a)) {
            fail(line.number, "arc endpoints do not match arc " + std::to_string(a));
        }
        long long alpha = parse_int(line, 3);
        if (alpha < 1) fail(line.number, "alphabet size must be >= 1");
        n.arc_alphabets.push_back(alpha);
    }
    n.coding_tables.assign(arcs, {});
    std::vector<char> seen(arcs, 0);
    for (; pos < lines.size(); ++pos) {
        const TokenLine& line = lines[pos];
        if (line.tokens[0] != "tab") fail(line.number, "unexpected line in nc file");
        long long a = parse_int(line, 1);
        if (a < 0 || a >= arcs) fail(line.number, "tab arc index out of range");
        if (seen[a]) fail(line.number, "duplicate tab line for arc " + std::to_string(a));
        seen[a] = 1;
        if (static_cast<long long>(line.tokens.size()) != 2 + total) {
            fail(line.number, "tab line needs " + std::to_string(total) + " outputs");
        }
        std::vector<int>& table = n.coding_tables[a];
        table.reserve(total);
        for (long long j = 0; j < total; ++j) {
            long long sym = parse_int(line, static_cast<std::size_t>(2 + j));
            if (sym < 0 || sym >= n.arc_alphabets[a]) {
                fail(line.number, "symbol out of alphabet range");
            }
            table.push_back(static_cast<int>(sym));
        }
    }
    for (int a = 0; a < arcs; ++a) {
        if (!seen[a]) fail(0, "missing tab line for arc " + std::to_string(a));
    }
    return n;
}

std::string serialize_nc(const NCSolution& n, const OrientedGraph& g) {
    std::ostringstream out;
    if (n.scale_b != 1) out << "b " << format_rational(n.scale_b) << "\n";
    for (std::size_t i = 0; i < n.message_sizes.size(); ++i) {
        out << "m " << i << " " << n.message_sizes[i] << "\n";
    }
    for (std::size_t a = 0; a < n.arc_alphabets.size(); ++a) {
        out << "arc " << g.arc_tail(static_cast<int>(a)) << " "
            << g.arc_head(static_cast<int>(a)) << " " << n.arc_alphabets[a] << "\n";
    }
    for (std::size_t a = 0; a < n.coding_tables.size(); ++a) {
        out << "tab " << a;
        for (int sym : n.coding_tables[a]) out << " " << sym;
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file '" + path + "' for writing", 0);
    out << content;
}

}  // namespace gaptensor
