// gaptensor: construct and verify gap-amplifying graph tensors.
//
// Exit codes: 0 success, 1 refusal (a size/resource cap was hit and reported),
// 2 contract violation, parse error, or any other failure.

#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "gaptensor/amplify.hpp"
#include "gaptensor/cbg.hpp"
#include "gaptensor/errors.hpp"
#include "gaptensor/graph.hpp"
#include "gaptensor/io.hpp"
#include "gaptensor/mcf.hpp"
#include "gaptensor/netcode.hpp"
#include "gaptensor/sparsity.hpp"
#include "gaptensor/standard_form.hpp"
#include "gaptensor/tensor.hpp"

namespace gt = gaptensor;

namespace {

std::string fmt(const gt::Rational& r) { return gt::format_rational(r); }

void emit_requirement(const gt::Refusal& r) {
    std::cerr << "refusal: " << r.what() << "\n";
    if (r.has_requirement()) {
        const gt::Refusal::Requirement& q = r.requirement();
        std::cerr << "required r " << q.required_r << "\n"
                  << "required s " << q.required_s << "\n"
                  << "required girth " << q.required_girth << "\n"
                  << "size floor " << q.size_floor << "\n"
                  << "size cap " << q.size_cap << "\n";
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int run_mcf(const std::string& input, const std::string& flow_out,
            const std::string& dual_out) {
    gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
    auto [flow, dual] = gt::solve_primal_dual(g);
    std::cout << "lambda " << fmt(flow.lambda) << "\n";
    if (!flow_out.empty()) gt::write_file(flow_out, gt::serialize_flow(flow, g));
    if (!dual_out.empty()) gt::write_file(dual_out, gt::serialize_dual(dual));
    return 0;
}

int run_dual(const std::string& input, const std::string& out) {
    gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
    gt::DualSolution d = gt::optimal_dual(g);
    std::cout << "z " << fmt(d.objective) << "\n";
    if (!out.empty()) gt::write_file(out, gt::serialize_dual(d));
    return 0;
}

int run_verify_dual(const std::string& input, const std::string& dual_file) {
    gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
    gt::DualSolution d = gt::parse_dual(gt::read_file(dual_file), g.edges.size());
    gt::DualCheck check = gt::verify_dual(g, d);
    std::cout << "feasible " << (check.feasible ? "true" : "false") << "\n";
    std::cout << "objective " << fmt(check.objective) << "\n";
    if (check.feasible) std::cout << "slack " << fmt(check.slack) << "\n";
    for (const std::string& v : check.violations) std::cout << "violation " << v << "\n";
    return 0;
}

int run_standard_form(const std::string& input, const std::string& dual_file,
                      const std::string& eps_str, const std::string& alpha_str,
                      const std::string& graph_out, const std::string& dual_out) {
    gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
    gt::DualSolution d = gt::parse_dual(gt::read_file(dual_file), g.edges.size());
    gt::Rational eps = gt::parse_rational(eps_str);
    auto [g1, d1] = gt::contract_zero_weight(g, d);
    gt::CommodityGraph g2 = gt::equalize_demands(g1);
    gt::Rational alpha = alpha_str.empty()
                             ? ((gt::Rational(1) + eps) / (gt::Rational(1) + eps / 2)) - 1
                             : gt::parse_rational(alpha_str);
    alpha.canonicalize();
    gt::CommodityGraph out_g;
    gt::DualSolution out_d;
    if (alpha > 0) {
        std::tie(out_g, out_d) = gt::alpha_extension(g2, d1, eps, alpha);
    } else {
        out_g = g2;
        out_d = d1;
    }
    gt::StandardFormReport report = gt::is_standard_form(out_g, out_d);
    std::cout << "standard " << (report.standard ? "true" : "false") << "\n";
    std::cout << "alpha " << fmt(alpha) << "\n";
    std::cout << "z " << fmt(out_d.objective) << "\n";
    if (report.standard) {
        std::cout << "equal_demand " << fmt(report.certificate.equal_demand) << "\n";
        std::cout << "min_weight " << fmt(report.certificate.min_dual_weight) << "\n";
    }
    for (const std::string& v : report.violations) std::cout << "violation " << v << "\n";
    if (!graph_out.empty()) gt::write_file(graph_out, gt::serialize_graph(out_g));
    if (!dual_out.empty()) gt::write_file(dual_out, gt::serialize_dual(out_d));
    return report.standard ? 0 : 2;
}

int run_cbg(int r, int s, int g, long long size_cap, unsigned seed, const std::string& out) {
    gt::ColoredBipartite b = gt::construct_cbg(r, s, g, size_cap, seed);
    std::cout << "n1 " << b.n1 << "\n"
              << "n2 " << b.n2 << "\n"
              << "d1 " << b.d1 << "\n"
              << "d2 " << b.d2 << "\n"
              << "girth " << gt::format_girth(gt::cbg_girth(b)) << "\n";
    if (!out.empty()) gt::write_file(out, gt::serialize_cbg(b));
    return 0;
}

int run_girth(const std::string& input, bool as_cbg) {
    if (as_cbg) {
        gt::ColoredBipartite b = gt::parse_cbg(gt::read_file(input));
        std::cout << "girth " << gt::format_girth(gt::cbg_girth(b)) << "\n";
    } else {
        gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
        std::cout << "girth " << gt::format_girth(gt::girth(g)) << "\n";
    }
    return 0;
}

int run_tensor(const std::string& g1_file, const std::string& g2_file,
               const std::string& d1_file, const std::string& d2_file,
               const std::string& scaffold_file, bool auto_scaffold, long long size_cap,
               unsigned seed, const std::string& out, const std::string& dual_out,
               const std::string& scaffold_out) {
    gt::CommodityGraph g1 = gt::parse_graph(gt::read_file(g1_file));
    gt::CommodityGraph g2 = gt::parse_graph(gt::read_file(g2_file));
    gt::DualSolution d1 = gt::parse_dual(gt::read_file(d1_file), g1.edges.size());
    gt::DualSolution d2 = gt::parse_dual(gt::read_file(d2_file), g2.edges.size());

    gt::DistanceSummary s1 = gt::shortest_pair_distances(g1, d1.weights);
    gt::DistanceSummary s2 = gt::shortest_pair_distances(g2, d2.weights);
    long long g_req = gt::girth_requirement(s1, s2);

    gt::ColoredBipartite scaffold;
    if (!scaffold_file.empty()) {
        scaffold = gt::parse_cbg(gt::read_file(scaffold_file));
    } else if (auto_scaffold) {
        if (g_req > std::numeric_limits<int>::max()) {
            throw gt::Refusal("tensor: required girth parameter out of range");
        }
        scaffold = gt::construct_cbg(2 * static_cast<int>(g1.edges.size()),
                                     static_cast<int>(g2.commodities.size()),
                                     static_cast<int>(g_req), size_cap, seed);
    } else {
        throw gt::ContractViolation("tensor: supply --scaffold or --auto-scaffold");
    }

    gt::OrientedGraph g1p = gt::orient_half(g1);
    gt::OrientedGraph g2p = gt::orient_half(g2);
    gt::TensorResult t = gt::graph_tensor(g1p, g2p, scaffold);
    gt::TensorDualResult td = gt::tensor_dual(g1, g2, d1, d2, t);

    std::cout << "q " << fmt(t.cert.q) << "\n"
              << "girth_requirement " << td.required_g << "\n"
              << "scaffold_girth " << gt::format_girth(td.scaffold_girth) << "\n"
              << "certified " << (td.certified ? "true" : "false") << "\n"
              << "vertices " << t.graph.vertex_count << "\n"
              << "edges " << t.graph.edges.size() << "\n"
              << "commodities " << t.graph.commodities.size() << "\n"
              << "demand " << fmt(t.cert.new_demand) << "\n"
              << "z " << fmt(td.dual.objective) << "\n"
              << "z_product " << fmt(td.z_product) << "\n";

    // Distance multiplicativity: report how many tensor commodities sit at
    // exactly l1*l2 under the product dual.
    gt::DistanceSummary st = gt::shortest_pair_distances(t.graph, td.dual.weights);
    gt::Rational want = s1.l_max * s2.l_max;
    std::size_t at_product = 0;
    for (const gt::Rational& dist : st.distances) {
        if (dist == want) ++at_product;
    }
    std::cout << "l1_l2 " << fmt(want) << "\n"
              << "distances_at_product " << at_product << "/" << st.distances.size() << "\n";

    if (!out.empty()) gt::write_file(out, gt::serialize_graph(t.graph));
    if (!dual_out.empty()) gt::write_file(dual_out, gt::serialize_dual(td.dual));
    if (!scaffold_out.empty()) gt::write_file(scaffold_out, gt::serialize_cbg(scaffold));
    return 0;
}

int run_verify_nc(const std::string& oriented_file, const std::string& nc_file,
                  long long message_cap) {
    gt::OrientedGraph g = gt::parse_oriented(gt::read_file(oriented_file));
    gt::NCSolution n = gt::parse_nc(gt::read_file(nc_file), g);
    gt::NCReport report = gt::verify_nc(g, n, message_cap);
    std::cout << "valid " << (report.valid ? "true" : "false") << "\n";
    std::cout << "rate " << fmt(report.rate) << "\n";
    std::cout << "rate_exact " << (report.rate_exact ? "true" : "false") << "\n";
    std::cout << "message_total " << report.message_total << "\n";
    for (const std::string& v : report.violations) std::cout << "violation " << v << "\n";
    return 0;
}

int run_compose_nc(const std::string& g1_file, const std::string& g2_file,
                   const std::string& scaffold_file, const std::string& n1_file,
                   const std::string& n2_file, long long message_cap,
                   const std::string& out) {
    gt::OrientedGraph g1p = gt::parse_oriented(gt::read_file(g1_file));
    gt::OrientedGraph g2p = gt::parse_oriented(gt::read_file(g2_file));
    gt::ColoredBipartite scaffold = gt::parse_cbg(gt::read_file(scaffold_file));
    gt::NCSolution n1 = gt::parse_nc(gt::read_file(n1_file), g1p);
    gt::NCSolution n2 = gt::parse_nc(gt::read_file(n2_file), g2p);

    gt::TensorResult t = gt::graph_tensor(g1p, g2p, scaffold);
    gt::NCSolution composed = gt::compose_nc(n1, n2, scaffold, t, message_cap);
    gt::OrientedGraph forward = gt::tensor_forward_orientation(t);
    gt::NCReport report = gt::verify_nc(forward, composed, message_cap);
    std::cout << "valid " << (report.valid ? "true" : "false") << "\n";
    std::cout << "rate " << fmt(report.rate) << "\n";
    std::cout << "scale_b " << fmt(composed.scale_b) << "\n";
    std::cout << "q " << fmt(t.cert.q) << "\n";
    for (const std::string& v : report.violations) std::cout << "violation " << v << "\n";
    if (!out.empty()) gt::write_file(out, gt::serialize_nc(composed, forward));
    return 0;
}

int run_sparsity(const std::string& input, int max_vertices) {
    gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
    gt::CutCertificate cut = gt::sparsest_cut_bruteforce(g, max_vertices);
    gt::SandwichReport sandwich = gt::sandwich_report(g, max_vertices);
    std::cout << "sparsity " << fmt(cut.sparsity) << "\n"
              << "capacity " << fmt(cut.capacity) << "\n"
              << "demand " << fmt(cut.demand) << "\n";
    std::cout << "cut";
    for (int v : cut.side_U) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "lambda " << fmt(sandwich.lambda) << "\n"
              << "ratio " << fmt(sandwich.ratio) << "\n";
    return 0;
}

int run_check_product(const std::string& g1_file, const std::string& g2_file,
                      const std::string& tensor_file, int max_vertices) {
    gt::CommodityGraph g1 = gt::with_unit_demands(gt::parse_graph(gt::read_file(g1_file)));
    gt::CommodityGraph g2 = gt::with_unit_demands(gt::parse_graph(gt::read_file(g2_file)));
    gt::CommodityGraph t = gt::with_unit_demands(gt::parse_graph(gt::read_file(tensor_file)));
    gt::SparsityProduct p = gt::check_sparsity_product(g1, g2, t, max_vertices);
    std::cout << "lhs " << fmt(p.lhs) << "\n"
              << "rhs " << fmt(p.rhs) << "\n"
              << "holds " << (p.holds ? "true" : "false") << "\n";
    return 0;
}

std::string trace_to_text(const gt::AmplifyTrace& trace) {
    std::ostringstream out;
    for (const gt::AmplifyStep& s : trace.steps) {
        out << "step " << s.iteration << " v " << s.vertex_count << " m " << s.edge_count
            << " k " << s.commodity_count << " demand " << fmt(s.demand) << " z "
            << fmt(s.z) << " gap " << fmt(s.gap_factor) << " girth " << s.girth_param
            << " w " << fmt(s.w_min) << " l " << fmt(s.l_max) << " n1 " << s.scaffold_n1
            << " n2 " << s.scaffold_n2 << "\n";
    }
    if (trace.refusal.refused) {
        out << "refused " << trace.refusal.reason << "\n";
        out << "required r " << trace.refusal.required_r << " s " << trace.refusal.required_s
            << " girth " << trace.refusal.required_girth << " floor "
            << trace.refusal.size_floor << " cap " << trace.refusal.size_cap << "\n";
    }
    return out.str();
}

int run_amplify(const std::string& input, const std::string& dual_file,
                const std::string& eps_str, int iters, long long size_cap,
                const std::string& trace_out, const std::string& graph_out,
                const std::string& dual_out) {
    gt::CommodityGraph g = gt::parse_graph(gt::read_file(input));
    gt::DualSolution d = gt::parse_dual(gt::read_file(dual_file), g.edges.size());
    gt::Rational eps = gt::parse_rational(eps_str);
    gt::AmplifyTrace trace = gt::iterate(g, d, eps, iters, size_cap);
    std::string text = trace_to_text(trace);
    std::cout << text;
    if (!trace_out.empty()) gt::write_file(trace_out, text);
    if (!graph_out.empty()) gt::write_file(graph_out, gt::serialize_graph(trace.graph));
    if (!dual_out.empty()) gt::write_file(dual_out, gt::serialize_dual(trace.dual));
    return 0;
}

int run_estimate_size(long long cm, const std::string& c1_str, int i, bool print_exact) {
    gt::SizeEstimate est = gt::size_estimate(cm, gt::parse_rational(c1_str), i);
    std::cout << "log2 " << est.log2_value << "\n";
    if (est.exponent_integral) {
        std::cout << "exponent " << est.exponent.get_str() << "\n";
    }
    if (est.exact_available) {
        std::string digits = est.exact_value.get_str();
        std::cout << "exact_digits " << digits.size() << "\n";
        if (print_exact) std::cout << "exact " << digits << "\n";
    }
    return 0;
}

gt::CommodityGraph four_cycle() {
    gt::CommodityGraph g;
    g.vertex_count = 4;
    g.edges = {{0, 1, gt::Rational(1)},
               {1, 2, gt::Rational(1)},
               {2, 3, gt::Rational(1)},
               {3, 0, gt::Rational(1)}};
    g.commodities = {{0, 2, gt::Rational(1)}, {1, 3, gt::Rational(1)}};
    return g;
}

int run_demo() {
    gt::CommodityGraph g = four_cycle();
    std::cout << "demo 4-cycle gap amplification\n";
    auto [flow, lp_dual] = gt::solve_primal_dual(g);
    std::cout << "lambda " << fmt(flow.lambda) << "\n";
    // The simplex vertex may park weight on two opposite edges; the uniform
    // dual is optimal too and keeps every weight positive for amplification.
    gt::DualSolution dual;
    dual.weights.assign(g.edges.size(), gt::Rational(1, 4));
    dual.objective = gt::Rational(1);
    gt::DualCheck uniform_check = gt::verify_dual(g, dual);
    if (!uniform_check.feasible || uniform_check.objective != lp_dual.objective) {
        std::cout << "uniform dual rejected, keeping the LP dual\n";
        dual = lp_dual;
    }
    std::cout << "z " << fmt(dual.objective) << "\n";
    gt::DistanceSummary ds = gt::shortest_pair_distances(g, dual.weights);
    std::cout << "w_min " << fmt(ds.w_min) << "\n";
    std::cout << "l_max " << fmt(ds.l_max) << "\n";
    gt::StandardFormReport form = gt::is_standard_form(g, dual);
    std::cout << "standard " << (form.standard ? "true" : "false") << "\n";
    auto [tg, td, cert] = gt::amplify_once(g, dual, gt::Rational(0));
    std::cout << "girth_requirement " << cert.girth_param << "\n"
              << "scaffold_n1 " << cert.scaffold_n1 << "\n"
              << "scaffold_n2 " << cert.scaffold_n2 << "\n"
              << "q " << fmt(cert.tensor.q) << "\n"
              << "tensor_vertices " << tg.vertex_count << "\n"
              << "tensor_edges " << tg.edges.size() << "\n"
              << "tensor_commodities " << tg.commodities.size() << "\n"
              << "tensor_demand " << fmt(cert.tensor.new_demand) << "\n"
              << "z_out " << fmt(cert.z_out) << "\n";
    gt::DistanceSummary st = gt::shortest_pair_distances(tg, td.weights);
    gt::Rational want = ds.l_max * ds.l_max;
    std::size_t at_product = 0;
    for (const gt::Rational& dist : st.distances) {
        if (dist == want) ++at_product;
    }
    std::cout << "l1_l2 " << fmt(want) << "\n"
              << "distances_at_product " << at_product << "/" << st.distances.size() << "\n";
    gt::StandardFormReport out_form = gt::is_standard_form(tg, td);
    std::cout << "tensor_standard " << (out_form.standard ? "true" : "false") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gap-amplifying graph tensor toolkit"};
    app.require_subcommand(1);

    // mcf
    std::string mcf_input, mcf_flow_out, mcf_dual_out;
    CLI::App* mcf = app.add_subcommand("mcf", "solve the concurrent-flow LP");
    mcf->add_option("--input", mcf_input)->required();
    mcf->add_option("--flow-out", mcf_flow_out);
    mcf->add_option("--dual-out", mcf_dual_out);

    // dual
    std::string dual_input, dual_out_path;
    CLI::App* dual = app.add_subcommand("dual", "compute the optimal dual");
    dual->add_option("--input", dual_input)->required();
    dual->add_option("--out", dual_out_path);

    // verify-dual
    std::string vd_input, vd_dual;
    CLI::App* vd = app.add_subcommand("verify-dual", "check a dual solution");
    vd->add_option("--input", vd_input)->required();
    vd->add_option("--dual", vd_dual)->required();

    // standard-form
    std::string sf_input, sf_dual, sf_eps = "0", sf_alpha, sf_graph_out, sf_dual_out;
    CLI::App* sf = app.add_subcommand("standard-form", "standardize a graph-dual pair");
    sf->add_option("--input", sf_input)->required();
    sf->add_option("--dual", sf_dual)->required();
    sf->add_option("--eps", sf_eps);
    sf->add_option("--alpha", sf_alpha);
    sf->add_option("--graph-out", sf_graph_out);
    sf->add_option("--dual-out", sf_dual_out);

    // cbg
    int cbg_r = 0, cbg_s = 0, cbg_g = 0;
    long long cbg_cap = gt::kDefaultScaffoldCap;
    unsigned cbg_seed = 1;
    std::string cbg_out;
    CLI::App* cbg = app.add_subcommand("cbg", "construct a colored bipartite scaffold");
    cbg->add_option("--r", cbg_r)->required();
    cbg->add_option("--s", cbg_s)->required();
    cbg->add_option("--g", cbg_g)->required();
    cbg->add_option("--size-cap", cbg_cap);
    cbg->add_option("--seed", cbg_seed);
    cbg->add_option("--out", cbg_out);

    // girth
    std::string girth_input;
    bool girth_cbg = false;
    CLI::App* gir = app.add_subcommand("girth", "shortest cycle length");
    gir->add_option("--input", girth_input)->required();
    gir->add_flag("--cbg", girth_cbg, "input is a cbg file");

    // tensor
    std::string t_g1, t_g2, t_d1, t_d2, t_scaffold, t_out, t_dual_out, t_scaffold_out;
    bool t_auto = false;
    long long t_cap = gt::kDefaultSizeCap;
    unsigned t_seed = 1;
    CLI::App* ten = app.add_subcommand("tensor", "tensor two graph-dual pairs");
    ten->add_option("--g1", t_g1)->required();
    ten->add_option("--g2", t_g2)->required();
    ten->add_option("--d1", t_d1)->required();
    ten->add_option("--d2", t_d2)->required();
    ten->add_option("--scaffold", t_scaffold);
    ten->add_flag("--auto-scaffold", t_auto);
    ten->add_option("--size-cap", t_cap);
    ten->add_option("--seed", t_seed);
    ten->add_option("--out", t_out);
    ten->add_option("--dual-out", t_dual_out);
    ten->add_option("--scaffold-out", t_scaffold_out);

    // verify-nc
    std::string vn_oriented, vn_nc;
    long long vn_cap = gt::kDefaultMessageCap;
    CLI::App* vn = app.add_subcommand("verify-nc", "verify a network coding solution");
    vn->add_option("--oriented", vn_oriented)->required();
    vn->add_option("--nc", vn_nc)->required();
    vn->add_option("--message-cap", vn_cap);

    // compose-nc
    std::string cn_g1, cn_g2, cn_scaffold, cn_n1, cn_n2, cn_out;
    long long cn_cap = gt::kDefaultMessageCap;
    CLI::App* cn = app.add_subcommand("compose-nc", "compose two coding solutions");
    cn->add_option("--g1-oriented", cn_g1)->required();
    cn->add_option("--g2-oriented", cn_g2)->required();
    cn->add_option("--scaffold", cn_scaffold)->required();
    cn->add_option("--n1", cn_n1)->required();
    cn->add_option("--n2", cn_n2)->required();
    cn->add_option("--message-cap", cn_cap);
    cn->add_option("--out", cn_out);

    // sparsity
    std::string sp_input;
    int sp_max = gt::kDefaultCutVertexCap;
    CLI::App* sp = app.add_subcommand("sparsity", "exact sparsest cut");
    sp->add_option("--input", sp_input)->required();
    sp->add_option("--max-vertices", sp_max);

    // check-product
    std::string cp_g1, cp_g2, cp_tensor;
    int cp_max = gt::kDefaultCutVertexCap;
    CLI::App* cp = app.add_subcommand("check-product", "sparsity product inequality");
    cp->add_option("--g1", cp_g1)->required();
    cp->add_option("--g2", cp_g2)->required();
    cp->add_option("--tensor", cp_tensor)->required();
    cp->add_option("--max-vertices", cp_max);

    // amplify
    std::string am_input, am_dual, am_eps = "0", am_trace, am_graph_out, am_dual_out;
    int am_iters = 1;
    long long am_cap = gt::kDefaultSizeCap;
    CLI::App* am = app.add_subcommand("amplify", "iterated tensor amplification");
    am->add_option("--input", am_input)->required();
    am->add_option("--dual", am_dual)->required();
    am->add_option("--eps", am_eps);
    am->add_option("--iters", am_iters);
    am->add_option("--size-cap", am_cap);
    am->add_option("--trace-out", am_trace);
    am->add_option("--graph-out", am_graph_out);
    am->add_option("--dual-out", am_dual_out);

    // estimate-size
    long long es_cm = 0;
    std::string es_c1;
    int es_i = 0;
    bool es_print = false;
    CLI::App* es = app.add_subcommand("estimate-size", "Appendix-style edge bound");
    es->add_option("--cm", es_cm)->required();
    es->add_option("--c1", es_c1)->required();
    es->add_option("--i", es_i)->required();
    es->add_flag("--print-exact", es_print);

    // demo
    CLI::App* demo = app.add_subcommand("demo", "end-to-end pipeline on the 4-cycle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mcf->parsed()) return run_mcf(mcf_input, mcf_flow_out, mcf_dual_out);
        if (dual->parsed()) return run_dual(dual_input, dual_out_path);
        if (vd->parsed()) return run_verify_dual(vd_input, vd_dual);
        if (sf->parsed()) {
            return run_standard_form(sf_input, sf_dual, sf_eps, sf_alpha, sf_graph_out,
                                     sf_dual_out);
        }
        if (cbg->parsed()) return run_cbg(cbg_r, cbg_s, cbg_g, cbg_cap, cbg_seed, cbg_out);
        if (gir->parsed()) return run_girth(girth_input, girth_cbg);
        if (ten->parsed()) {
            return run_tensor(t_g1, t_g2, t_d1, t_d2, t_scaffold, t_auto, t_cap, t_seed,
                              t_out, t_dual_out, t_scaffold_out);
        }
        if (vn->parsed()) return run_verify_nc(vn_oriented, vn_nc, vn_cap);
        if (cn->parsed()) {
            return run_compose_nc(cn_g1, cn_g2, cn_scaffold, cn_n1, cn_n2, cn_cap, cn_out);
        }
        if (sp->parsed()) return run_sparsity(sp_input, sp_max);
        if (cp->parsed()) return run_check_product(cp_g1, cp_g2, cp_tensor, cp_max);
        if (am->parsed()) {
            return run_amplify(am_input, am_dual, am_eps, am_iters, am_cap, am_trace,
                               am_graph_out, am_dual_out);
        }
        if (es->parsed()) return run_estimate_size(es_cm, es_c1, es_i, es_print);
        if (demo->parsed()) return run_demo();
    } catch (const gt::Refusal& r) {
        emit_requirement(r);
        return 1;
    } catch (const gt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const gt::ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "unknown subcommand\n";
    return 2;
}
