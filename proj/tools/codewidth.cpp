// Command-line front end: construct codes, compute width/profile reports,
// run the verification suites, and emit JSON/CSV/text reports.
//
// Exit codes: 0 success (and all verifications passed), 1 at least one
// verification failed, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "codewidth/code.hpp"
#include "codewidth/cubic_tree.hpp"
#include "codewidth/ghw.hpp"
#include "codewidth/treedecomp.hpp"
#include "codewidth/trellis.hpp"
#include "codewidth/verify.hpp"

namespace {

using nlohmann::json;

struct OutputOpts {
    std::string format = "text";
    std::string path;
    bool timing = false;
    int threads = 0;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", opts.path, "Write the report to a file instead of stdout");
    cmd->add_flag("--timing", opts.timing, "Include wall-clock timings in the output");
    cmd->add_option("--threads", opts.threads,
                    "Worker threads for the exhaustive engines (0 = all available)");
}

void write_output(const OutputOpts& opts, const std::string& bytes) {
    if (opts.path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(opts.path, std::ios::binary);
    if (!out) throw std::runtime_error(opts.path + ": cannot open for writing");
    out << bytes;
    if (!out) throw std::runtime_error(opts.path + ": write failed");
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// ---------------------------------------------------------------------------
// Code sources

struct CodeSource {
    std::string kind;  // rm | rs | file
    std::string path;
    int r = -1, m = -1, n = -1, k = -1;
    std::uint32_t p = 0;
};

void add_code_source(CLI::App* cmd, CodeSource& src) {
    cmd->add_option("kind", src.kind, "Code source: rm, rs, or file")
        ->required()
        ->check(CLI::IsMember({"rm", "rs", "file"}));
    cmd->add_option("path", src.path, "Code file path (for the file source)");
    cmd->add_option("--r", src.r, "Reed-Muller order r");
    cmd->add_option("--m", src.m, "Reed-Muller parameter m (length 2^m)");
    cmd->add_option("--n", src.n, "Reed-Solomon length n");
    cmd->add_option("--k", src.k, "Reed-Solomon dimension k");
    cmd->add_option("--p", src.p, "Reed-Solomon field prime p");
}

codewidth::LinearCode make_code(const CodeSource& src) {
    if (src.kind == "rm") {
        if (src.r < 0 || src.m < 0) throw std::runtime_error("rm source requires --r and --m");
        return codewidth::LinearCode::reed_muller(src.r, src.m);
    }
    if (src.kind == "rs") {
        if (src.n < 0 || src.k < 0 || src.p == 0)
            throw std::runtime_error("rs source requires --n, --k and --p");
        return codewidth::LinearCode::reed_solomon(src.n, src.k, src.p);
    }
    if (src.path.empty()) throw std::runtime_error("file source requires a path");
    return codewidth::LinearCode::load(src.path);
}

json source_params(const CodeSource& src) {
    json j{{"source", src.kind}};
    if (src.kind == "rm") {
        j["r"] = src.r;
        j["m"] = src.m;
    } else if (src.kind == "rs") {
        j["n"] = src.n;
        j["k"] = src.k;
        j["p"] = src.p;
    } else {
        j["path"] = src.path;
    }
    return j;
}

json code_json(const codewidth::LinearCode& code) {
    return {{"q", code.field().modulus()}, {"n", code.length()}, {"k", code.dimension()}};
}

std::string order_string(const codewidth::CoordinateOrder& order) {
    std::string s;
    for (int i = 0; i < order.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(order.at(i));
    }
    return s;
}

codewidth::CoordinateOrder parse_order(const std::string& text, int n) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stoi(item));
    if (static_cast<int>(coords.size()) != n)
        throw std::runtime_error("--order must list all " + std::to_string(n) + " coordinates");
    return codewidth::CoordinateOrder(std::move(coords));
}

// ---------------------------------------------------------------------------
// Report rendering

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : rows) out += key + "," + csv_quote(value) + "\n";
    return out;
}

int run_widths(const CodeSource& src, const OutputOpts& opts) {
    const codewidth::LinearCode code = make_code(src);
    const codewidth::WidthReport report = codewidth::compute_width_report(code, opts.threads);
    const std::string tree = codewidth::to_parenthesis(report.witness_tree);
    const std::string order = order_string(report.witness_order);

    if (opts.format == "json") {
        json kappa = json::array();
        for (const auto& [node, kv] : report.kappa_by_node) kappa.push_back({{"node", node}, {"kappa", kv}});
        json j{{"code", code_json(code)},
               {"command", "widths"},
               {"params", source_params(src)},
               {"result", {{"treewidth", report.treewidth}, {"trelliswidth", report.trelliswidth}}},
               {"witnesses", {{"tree", tree}, {"order", order}, {"kappa_by_node", kappa}}}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        write_output(opts, render_kv_csv({{"treewidth", std::to_string(report.treewidth)},
                                          {"trelliswidth", std::to_string(report.trelliswidth)},
                                          {"witness_tree", tree},
                                          {"witness_order", order}}));
    } else {
        std::string out = "code: q=" + std::to_string(code.field().modulus()) +
                          " n=" + std::to_string(code.length()) + " k=" + std::to_string(code.dimension()) +
                          "\n";
        out += "treewidth: " + std::to_string(report.treewidth) + "\n";
        out += "trelliswidth: " + std::to_string(report.trelliswidth) + "\n";
        out += "witness tree: " + tree + "\n";
        out += "witness order: " + order + "\n";
        out += "kappa by node:";
        for (const auto& [node, kv] : report.kappa_by_node)
            out += " " + std::to_string(node) + ":" + std::to_string(kv);
        out += "\n";
        write_output(opts, out);
    }
    return 0;
}

int run_trellis_profile(const CodeSource& src, const std::string& order_text, const OutputOpts& opts) {
    json code_info;
    codewidth::TrellisProfile profile = [&] {
        if (src.kind == "rm" && order_text.empty()) {
            // Standard bit order: the counting engine needs no linear algebra.
            if (src.r < 0 || src.m < 0) throw std::runtime_error("rm source requires --r and --m");
            code_info = {{"q", 2}, {"n", 1LL << src.m}, {"k", codewidth::k_rm(src.r, src.m)}};
            return codewidth::rm_standard_profile(src.r, src.m);
        }
        const codewidth::LinearCode code = make_code(src);
        code_info = code_json(code);
        const codewidth::CoordinateOrder order = order_text.empty()
                                                     ? codewidth::CoordinateOrder::identity(code.length())
                                                     : parse_order(order_text, code.length());
        return codewidth::trellis_profile(code, order);
    }();

    const int n = static_cast<int>(profile.branch_dims.size());
    if (opts.format == "json") {
        json j{{"code", code_info},
               {"command", "trellis-profile"},
               {"params", source_params(src)},
               {"result",
                {{"state_dims", profile.state_dims},
                 {"branch_dims", profile.branch_dims},
                 {"max_state", profile.max_state()},
                 {"max_branch", profile.max_branch()}}},
               {"witnesses", {{"order", order_string(profile.order)}}}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        std::string out = "i,sigma_i,tau_i\n";
        for (int i = 0; i <= n; ++i) {
            out += std::to_string(i) + "," + std::to_string(profile.state_dims[static_cast<std::size_t>(i)]) +
                   ",";
            if (i < n) out += std::to_string(profile.branch_dims[static_cast<std::size_t>(i)]);
            out += "\n";
        }
        write_output(opts, out);
    } else {
        // Two aligned rows; branch values sit between the states they join.
        auto cell = [](int v) {
            std::string s = std::to_string(v);
            return s + std::string(s.size() < 4 ? 4 - s.size() : 1, ' ');
        };
        std::string sigma = "sigma ", tau = "tau     ";
        for (int i = 0; i <= n; ++i) sigma += cell(profile.state_dims[static_cast<std::size_t>(i)]);
        for (int i = 0; i < n; ++i) tau += cell(profile.branch_dims[static_cast<std::size_t>(i)]);
        write_output(opts, sigma + "\n" + tau + "\n");
    }
    return 0;
}

int run_ghw(const CodeSource& src, const OutputOpts& opts) {
    codewidth::GhwProfile ghw{{}};
    json code_info;
    if (src.kind == "rm") {
        if (src.r < 0 || src.m < 0) throw std::runtime_error("rm source requires --r and --m");
        const long long k = codewidth::k_rm(src.r, src.m);
        for (long long u = 1; u <= k; ++u)
            ghw.d.push_back(static_cast<int>(codewidth::ghw_rm(u, src.r, src.m)));
        code_info = {{"q", 2}, {"n", 1LL << src.m}, {"k", k}};
    } else if (src.kind == "rs") {
        if (src.n < 0 || src.k < 0 || src.p == 0)
            throw std::runtime_error("rs source requires --n, --k and --p");
        ghw = codewidth::ghw_mds(src.n, src.k);
        code_info = {{"q", src.p}, {"n", src.n}, {"k", src.k}};
    } else {
        const codewidth::LinearCode code = make_code(src);
        ghw = codewidth::ghw_from_uprofile(codewidth::u_profile_bruteforce(code));
        code_info = code_json(code);
    }

    if (opts.format == "json") {
        json j{{"code", code_info},
               {"command", "ghw"},
               {"params", source_params(src)},
               {"result", {{"d", ghw.d}}},
               {"witnesses", json::object()}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        std::string out = "u,d_u\n";
        for (int u = 1; u <= ghw.k(); ++u) out += std::to_string(u) + "," + std::to_string(ghw.at(u)) + "\n";
        write_output(opts, out);
    } else {
        std::string out;
        for (int u = 1; u <= ghw.k(); ++u)
            out += "d_" + std::to_string(u) + " = " + std::to_string(ghw.at(u)) + "\n";
        write_output(opts, out);
    }
    return 0;
}

int run_u_profile(const CodeSource& src, const OutputOpts& opts) {
    const codewidth::LinearCode code = make_code(src);
    const codewidth::UProfile profile = codewidth::u_profile_bruteforce(code);
    if (opts.format == "json") {
        json j{{"code", code_json(code)},
               {"command", "u-profile"},
               {"params", source_params(src)},
               {"result", {{"u", profile.u}}},
               {"witnesses", json::object()}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        std::string out = "s,U_s\n";
        for (int s = 0; s <= profile.n(); ++s)
            out += std::to_string(s) + "," + std::to_string(profile.at(s)) + "\n";
        write_output(opts, out);
    } else {
        std::string out;
        for (int s = 0; s <= profile.n(); ++s)
            out += "U_" + std::to_string(s) + " = " + std::to_string(profile.at(s)) + "\n";
        write_output(opts, out);
    }
    return 0;
}

int run_treewidth(const CodeSource& src, bool exhaustive, const OutputOpts& opts) {
    if (!exhaustive)
        throw std::runtime_error("treewidth: only the exhaustive search is available; pass --exhaustive");
    const codewidth::LinearCode code = make_code(src);
    const codewidth::TreewidthResult result = codewidth::treewidth_exhaustive(code, opts.threads);
    const std::string tree = codewidth::to_parenthesis(result.witness);
    if (opts.format == "json") {
        json j{{"code", code_json(code)},
               {"command", "treewidth"},
               {"params", source_params(src)},
               {"result", {{"treewidth", result.value}}},
               {"witnesses", {{"tree", tree}}}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        write_output(opts,
                     render_kv_csv({{"treewidth", std::to_string(result.value)}, {"witness_tree", tree}}));
    } else {
        write_output(opts, "treewidth: " + std::to_string(result.value) + "\nwitness tree: " + tree + "\n");
    }
    return 0;
}

int run_trelliswidth(const CodeSource& src, bool exhaustive, const OutputOpts& opts) {
    if (!exhaustive)
        throw std::runtime_error("trelliswidth: only the exhaustive search is available; pass --exhaustive");
    const codewidth::LinearCode code = make_code(src);
    const codewidth::TrelliswidthResult result = codewidth::trelliswidth_exhaustive(code, opts.threads);
    const std::string order = order_string(result.witness);
    if (opts.format == "json") {
        json j{{"code", code_json(code)},
               {"command", "trelliswidth"},
               {"params", source_params(src)},
               {"result", {{"trelliswidth", result.value}}},
               {"witnesses", {{"order", order}}}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        write_output(opts, render_kv_csv(
                               {{"trelliswidth", std::to_string(result.value)}, {"witness_order", order}}));
    } else {
        write_output(opts,
                     "trelliswidth: " + std::to_string(result.value) + "\nwitness order: " + order + "\n");
    }
    return 0;
}

int run_separators(const std::string& tree_text, const OutputOpts& opts) {
    const codewidth::CubicTree tree = codewidth::parse_parenthesis(tree_text);
    if (tree.num_leaves() < 3) throw std::runtime_error("separators: tree must have at least 3 leaves");
    const int jordan = codewidth::jordan_separator(tree);
    const codewidth::NodeSplit jsplit = codewidth::node_split(tree, jordan);
    // No node of the 3-leaf star lands in [n/2, 2n/3]; report only Jordan.
    const bool has_vstar = tree.num_leaves() >= 4;
    codewidth::EdgeSeparator vstar{-1, {}};
    if (has_vstar) vstar = codewidth::edge_separator_vstar(tree);

    if (opts.format == "json") {
        json j{{"command", "separators"},
               {"params", {{"tree", tree_text}, {"n", tree.num_leaves()}}},
               {"result", {{"jordan", {{"node", jordan}, {"counts", jsplit.counts}}}, {"vstar", nullptr}}}};
        if (has_vstar)
            j["result"]["vstar"] = {{"node", vstar.node}, {"counts", vstar.split.counts}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        auto counts = [](const std::array<int, 3>& c) {
            return std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]);
        };
        std::vector<std::pair<std::string, std::string>> rows{
            {"jordan_node", std::to_string(jordan)}, {"jordan_counts", counts(jsplit.counts)}};
        if (has_vstar) {
            rows.emplace_back("vstar_node", std::to_string(vstar.node));
            rows.emplace_back("vstar_counts", counts(vstar.split.counts));
        }
        write_output(opts, render_kv_csv(rows));
    } else {
        std::string out = "jordan node: " + std::to_string(jordan) + " (branch leaf counts " +
                          std::to_string(jsplit.counts[0]) + "," + std::to_string(jsplit.counts[1]) + "," +
                          std::to_string(jsplit.counts[2]) + ")\n";
        if (has_vstar)
            out += "v* node: " + std::to_string(vstar.node) + " (branch leaf counts " +
                   std::to_string(vstar.split.counts[0]) + "," + std::to_string(vstar.split.counts[1]) +
                   "," + std::to_string(vstar.split.counts[2]) + ")\n";
        else
            out += "v* node: none (no branch count reaches n/2 on the 3-leaf star)\n";
        write_output(opts, out);
    }
    return 0;
}

// Renders a batch of verification reports; exit 1 if any failed.
int emit_verify_reports(const std::vector<codewidth::VerificationReport>& reports, const OutputOpts& opts) {
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(r.to_json(opts.timing));
        write_output(opts, render_json(arr));
    } else if (opts.format == "csv") {
        std::string out = opts.timing ? "check,params,pass,counterexample,millis\n"
                                      : "check,params,pass,counterexample\n";
        for (const auto& r : reports) {
            out += r.check + "," + csv_quote(r.params.dump()) + "," + (r.pass ? "true" : "false") + ",";
            out += csv_quote(r.counterexample.is_null() ? "" : r.counterexample.dump());
            if (opts.timing) out += "," + std::to_string(r.millis);
            out += "\n";
        }
        write_output(opts, out);
    } else {
        std::string out;
        for (const auto& r : reports) {
            out += (r.pass ? "PASS " : "FAIL ") + r.check + " " + r.params.dump();
            if (opts.timing) out += " (" + std::to_string(r.millis) + " ms)";
            if (!r.pass) out += "\n  counterexample: " + r.counterexample.dump();
            out += "\n";
        }
        write_output(opts, out);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Width measures of linear codes: trellis/tree realization complexity, "
                 "generalized Hamming weights, and exhaustive theorem checks"};
    app.require_subcommand(1);

    OutputOpts opts;
    CodeSource src;
    std::string order_text;
    std::string tree_text;
    bool tw_exhaustive = false, tr_exhaustive = false;

    CLI::App* widths = app.add_subcommand("widths", "Exhaustive treewidth and trelliswidth with witnesses");
    add_code_source(widths, src);
    add_output_opts(widths, opts);

    CLI::App* tprof = app.add_subcommand("trellis-profile", "State/branch dimension profile");
    add_code_source(tprof, src);
    tprof->add_option("--order", order_text, "Coordinate order as a comma-separated permutation");
    add_output_opts(tprof, opts);

    CLI::App* ghw_cmd = app.add_subcommand("ghw", "Generalized Hamming weight hierarchy");
    add_code_source(ghw_cmd, src);
    add_output_opts(ghw_cmd, opts);

    CLI::App* uprof = app.add_subcommand("u-profile", "Maximal limited-support subcode dimensions");
    add_code_source(uprof, src);
    add_output_opts(uprof, opts);

    CLI::App* tw = app.add_subcommand("treewidth", "Exhaustive treewidth over all cubic trees (n <= 8)");
    add_code_source(tw, src);
    tw->add_flag("--exhaustive", tw_exhaustive, "Acknowledge the exhaustive search");
    add_output_opts(tw, opts);

    CLI::App* tr = app.add_subcommand("trelliswidth", "Exhaustive trelliswidth over all orders (n <= 10)");
    add_code_source(tr, src);
    tr->add_flag("--exhaustive", tr_exhaustive, "Acknowledge the exhaustive search");
    add_output_opts(tr, opts);

    CLI::App* sep = app.add_subcommand("separators", "Jordan and edge separators of a cubic tree");
    sep->add_option("--tree", tree_text, "Tree in nested-parenthesis form")->required();
    add_output_opts(sep, opts);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    int max_n = 7, max_m_rm = 3, max_m_b = 12, max_m_c = 6, max_m_srm = 24, max_m_std = 4;
    std::uint32_t mds_p = 11;
    CLI::App* vmds = verify->add_subcommand("mds", "Treewidth == trelliswidth == min{k, n-k+1} on RS codes");
    vmds->add_option("--max-n", max_n, "Largest block length")->capture_default_str();
    vmds->add_option("--p", mds_p, "Field prime")->capture_default_str();
    add_output_opts(vmds, opts);
    CLI::App* vrm = verify->add_subcommand("rm", "Reed-Muller width theorem and supporting lemmas");
    vrm->add_option("--max-m", max_m_rm, "Largest m")->capture_default_str();
    add_output_opts(vrm, opts);
    CLI::App* vb = verify->add_subcommand("appendix-b", "Componentwise weight-vector inequality");
    vb->add_option("--max-m", max_m_b, "Largest m")->capture_default_str();
    add_output_opts(vb, opts);
    CLI::App* vc = verify->add_subcommand("appendix-c", "Canonical representation and closed-form U values");
    vc->add_option("--max-m", max_m_c, "Largest m")->capture_default_str();
    add_output_opts(vc, opts);
    CLI::App* vsrm = verify->add_subcommand("srm", "k - tau identity across all three proof cases");
    vsrm->add_option("--max-m", max_m_srm, "Largest m")->capture_default_str();
    add_output_opts(vsrm, opts);
    CLI::App* vprop1 = verify->add_subcommand("prop1", "Tree-independent node hypothesis for a code");
    add_code_source(vprop1, src);
    add_output_opts(vprop1, opts);
    CLI::App* vstd = verify->add_subcommand("std-order", "Standard-bit-order prefix/suffix dimensions");
    vstd->add_option("--max-m", max_m_std, "Largest m")->capture_default_str();
    add_output_opts(vstd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (widths->parsed()) return run_widths(src, opts);
        if (tprof->parsed()) return run_trellis_profile(src, order_text, opts);
        if (ghw_cmd->parsed()) return run_ghw(src, opts);
        if (uprof->parsed()) return run_u_profile(src, opts);
        if (tw->parsed()) return run_treewidth(src, tw_exhaustive, opts);
        if (tr->parsed()) return run_trelliswidth(src, tr_exhaustive, opts);
        if (sep->parsed()) return run_separators(tree_text, opts);

        std::vector<codewidth::VerificationReport> reports;
        if (vmds->parsed()) {
            for (int n = 1; n <= max_n; ++n)
                for (int k = 1; k <= n; ++k)
                    reports.push_back(codewidth::check_mds_theorem(n, k, mds_p, opts.threads));
        } else if (vrm->parsed()) {
            for (int m = 1; m <= max_m_rm; ++m)
                for (int r = 0; r <= m; ++r) {
                    reports.push_back(codewidth::check_rm_theorem(r, m, opts.threads));
                    if (r >= 1 && r <= m - 1) {
                        reports.push_back(codewidth::check_lemma_uab(r, m));
                        if (m <= 4) reports.push_back(codewidth::check_lemma_u_ineq(r, m));
                    }
                }
        } else if (vb->parsed()) {
            for (int m = 2; m <= max_m_b; ++m) reports.push_back(codewidth::check_appendix_b(m));
        } else if (vc->parsed()) {
            reports.push_back(codewidth::check_appendix_c(max_m_c));
        } else if (vsrm->parsed()) {
            reports.push_back(codewidth::check_srm_identity(max_m_srm));
        } else if (vprop1->parsed()) {
            reports.push_back(codewidth::check_prop1_hypothesis(make_code(src), opts.threads));
        } else if (vstd->parsed()) {
            for (int m = 1; m <= max_m_std; ++m)
                for (int r = 0; r <= m; ++r) reports.push_back(codewidth::check_std_bit_order(r, m));
        }
        return emit_verify_reports(reports, opts);
    } catch (const std::exception& e) {
        std::cerr << "codewidth: " << e.what() << "\n";
        return 2;
    }
}
