#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powergraph/classify.hpp"
#include "powergraph/expr.hpp"
#include "powergraph/files.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/subgroups.hpp"
#include "powergraph/verify.hpp"

namespace powergraph::cli {

namespace detail {

struct SourceOpts {
    std::string expr;
    std::string cay;
    std::string perm;
};

inline void add_source_options(CLI::App* sub, SourceOpts& src) {
    auto* grp = sub->add_option_group("source", "where the group comes from");
    grp->add_option("--group", src.expr,
                    "group expression, e.g. 'product(quaternion:8,cyclic:3)'");
    grp->add_option("--cay", src.cay, "path to a .cay multiplication table");
    grp->add_option("--perm", src.perm, "path to a .perm generator file");
    grp->require_option(1);
}

inline GroupTable load_source(const SourceOpts& src) {
    if (!src.expr.empty()) return build_group(src.expr);
    if (!src.cay.empty()) return read_cayley_file(src.cay);
    return read_perm_file(src.perm);
}

inline void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << text;
    if (!f) throw IoError("write failed: " + path);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void run_info(const GroupTable& g, std::ostream& out) {
    out << "name: " << g.name() << "\n";
    out << "order: " << g.order() << "\n";

    std::map<int, int> multiset;
    for (ElementId x = 0; x < g.order(); ++x) ++multiset[g.order_of(x)];
    out << "element orders:";
    for (const auto& [o, count] : multiset) out << ' ' << o << '^' << count;
    out << "\n";

    const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
    out << "maximal cyclic subgroups: " << fam.size() << "\n";
    out << "cyc size: " << cyc_set(g, fam).count() << "\n";

    for (long long p : factorize(g.order()).primes()) {
        const SylowProfile prof = sylow_profile(g, p);
        out << "sylow p=" << p << ": exponent=" << prof.exponent
            << " unique=" << yes_no(prof.unique) << " cyclic=" << yes_no(prof.cyclic)
            << " generalized_quaternion=" << yes_no(prof.generalized_quaternion) << "\n";
    }
}

inline SimpleGraph base_graph(const GroupTable& g, const std::string& kind) {
    return kind == "power" ? power_graph(g) : enhanced_power_graph(g);
}

inline void run_graph(const GroupTable& g, const std::string& kind, const std::string& form,
                      const std::string& format, const std::string& out_path,
                      std::ostream& out) {
    SimpleGraph graph = base_graph(g, kind);
    if (form == "complement") {
        graph = complement(graph);
    } else if (form == "star") {
        graph = star(complement(graph)).graph;
    }
    const GraphFormat f = format == "dot" ? GraphFormat::Dot : GraphFormat::EdgeList;
    write_text(export_graph(graph, f), out_path, out);
}

inline void run_diam(const GroupTable& g, const std::string& kind, std::ostream& out) {
    const SimpleGraph comp = complement(base_graph(g, kind));
    const StarDecomposition st = star(comp);
    if (st.kept.empty())
        throw EdgelessComplementError("the " + kind +
                                      " graph is complete; its complement has no edges");
    out << diameter(st.graph) << "\n";
    out << "isolated:";
    for (int v : st.isolated) out << ' ' << v << "(o=" << comp.labels[v].order << ")";
    out << "\n";
}

inline void run_classify(const GroupTable& g, std::ostream& out) {
    out << "group: " << g.name() << "\n";
    out << "order: " << g.order() << "\n";
    out << "cyclic: " << yes_no(g.is_cyclic()) << "\n";
    out << "elementary abelian 2-group: " << yes_no(is_elementary_abelian_2(g)) << "\n";
    out << "nilpotent: " << yes_no(is_nilpotent(g)) << "\n";
    out << "quaternion times odd cyclic: " << yes_no(recognize_q2m_times_odd_cyclic(g))
        << "\n";

    if (const auto w = is_psi_group(g))
        out << "psi: yes (p=" << w->prime << ", beta=" << w->beta << ", element "
            << w->element << " of order " << w->element_order << ")\n";
    else
        out << "psi: no\n";

    const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
    const Bitset cyc = cyc_set(g, fam);
    if (const auto w = is_phi_group(g, fam, cyc))
        out << "phi: yes (x=" << w->x << " o=" << g.order_of(w->x) << ", y=" << w->y
            << " o=" << g.order_of(w->y) << ")\n";
    else
        out << "phi: no\n";

    try {
        const DiameterPrediction p = predict_power_diameter(g);
        out << "power star diameter: " << p.value << " (" << to_string(p.reason) << ")\n";
    } catch (const EdgelessComplementError&) {
        out << "power star diameter: inapplicable (complement has no edges)\n";
    }
    try {
        const DiameterPrediction p = predict_enhanced_diameter(g, fam, cyc);
        out << "enhanced star diameter: " << p.value << " (" << to_string(p.reason) << ")\n";
    } catch (const EdgelessComplementError&) {
        out << "enhanced star diameter: inapplicable (complement has no edges)\n";
    }
}

inline int run_verify(const CatalogSpec& spec, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
    const std::vector<GroupTable> catalog = build_catalog(spec);
    const SweepResult res = sweep(catalog);

    std::ostringstream report;
    write_report(res.records, report);
    write_text(report.str(), out_path, out);

    for (const auto& v : res.violations) err << "violation: " << v << "\n";
    err << "groups: " << catalog.size() << "  records: " << res.records.size()
        << "  violations: " << res.violations.size() << "\n";
    return res.success() ? 0 : 4;
}

inline void run_search_phi(const CatalogSpec& spec, std::ostream& out, std::ostream& err) {
    const std::vector<GroupTable> catalog = build_catalog(spec);
    const std::vector<PhiHit> hits = search_phi(catalog);
    for (const auto& h : hits)
        out << h.name << ": x=" << h.witness.x << " y=" << h.witness.y << "\n";
    err << "phi groups: " << hits.size() << " of " << catalog.size() << " catalog groups\n";
}

} // namespace detail

// Entry point shared by the binary and the tests. args excludes argv[0].
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"power graph and enhanced power graph toolkit for finite groups",
                 "powergraph"};
    app.require_subcommand(1);

    detail::SourceOpts info_src;
    CLI::App* info = app.add_subcommand("info", "order profile and subgroup counts");
    detail::add_source_options(info, info_src);

    detail::SourceOpts graph_src;
    std::string graph_kind = "power", graph_form = "star", graph_format = "dot",
                graph_out = "-";
    CLI::App* graph = app.add_subcommand("graph", "export a graph");
    detail::add_source_options(graph, graph_src);
    graph->add_option("--kind", graph_kind, "power or enhanced")
        ->check(CLI::IsMember({"power", "enhanced"}));
    graph->add_option("--form", graph_form, "raw, complement, or star of the complement")
        ->check(CLI::IsMember({"raw", "complement", "star"}));
    graph->add_option("--format", graph_format, "dot or edgelist")
        ->check(CLI::IsMember({"dot", "edgelist"}));
    graph->add_option("--out", graph_out, "output path, - for stdout");

    detail::SourceOpts diam_src;
    std::string diam_kind = "power";
    CLI::App* diam = app.add_subcommand(
        "diam", "diameter of the star of the complement, plus isolated vertices");
    detail::add_source_options(diam, diam_src);
    diam->add_option("--kind", diam_kind, "power or enhanced")
        ->check(CLI::IsMember({"power", "enhanced"}));

    detail::SourceOpts classify_src;
    CLI::App* classify = app.add_subcommand("classify", "structural classification");
    detail::add_source_options(classify, classify_src);

    int verify_max_order = 100;
    std::string verify_out = "-";
    std::vector<std::string> verify_extra;
    CLI::App* verify = app.add_subcommand("verify",
                                          "sweep a catalog and verify predicted diameters");
    verify->add_option("--max-order", verify_max_order, "largest group order to enumerate");
    verify->add_option("--out", verify_out, "report path, - for stdout");
    verify->add_option("--extra", verify_extra, "extra group expression (repeatable)");

    int phi_max_order = 100;
    CLI::App* searchphi = app.add_subcommand("search-phi",
                                             "list catalog groups that are phi groups");
    searchphi->add_option("--max-order", phi_max_order, "largest group order to enumerate");

    detail::SourceOpts make_src;
    std::string make_out = "-";
    CLI::App* make = app.add_subcommand("make", "write a group as a .cay table");
    detail::add_source_options(make, make_src);
    make->add_option("--out", make_out, "output path, - for stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(info)) {
            detail::run_info(detail::load_source(info_src), out);
        } else if (app.got_subcommand(graph)) {
            detail::run_graph(detail::load_source(graph_src), graph_kind, graph_form,
                              graph_format, graph_out, out);
        } else if (app.got_subcommand(diam)) {
            detail::run_diam(detail::load_source(diam_src), diam_kind, out);
        } else if (app.got_subcommand(classify)) {
            detail::run_classify(detail::load_source(classify_src), out);
        } else if (app.got_subcommand(verify)) {
            CatalogSpec spec;
            spec.max_order = verify_max_order;
            spec.extra_exprs = verify_extra;
            return detail::run_verify(spec, verify_out, out, err);
        } else if (app.got_subcommand(searchphi)) {
            CatalogSpec spec;
            spec.max_order = phi_max_order;
            detail::run_search_phi(spec, out, err);
        } else if (app.got_subcommand(make)) {
            std::ostringstream text;
            write_cayley(detail::load_source(make_src), text);
            detail::write_text(text.str(), make_out, out);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolationError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace powergraph::cli
