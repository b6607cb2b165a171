// propbench: enumerate small graphs, decide property membership, and run the
// verification suites over the truncated universe.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpw/decomp.hpp"
#include "gpw/factorlab.hpp"
#include "gpw/forbidden.hpp"
#include "gpw/graph6.hpp"
#include "gpw/propfile.hpp"

using nlohmann::ordered_json;
using namespace gpw;

namespace {

constexpr int kSchemaVersion = 1;

struct Check {
    std::string name;
    bool pass;
    ordered_json detail;
};

PropertyPtr resolve_property(const std::string& id, const std::string& props_path) {
    if (!props_path.empty()) {
        std::ifstream in(props_path);
        if (!in) throw Error("cannot open property file: " + props_path);
        PropertyFile f = parse_properties(in);
        auto it = f.properties.find(id);
        if (it != f.properties.end()) return it->second;
    }
    if (PropertyPtr p = parse_builtin_token(id)) return p;
    throw Error("unknown property: " + id);
}

int emit_report(const std::string& suite, const ordered_json& params,
                const std::vector<Check>& checks, const std::string& format,
                const std::string& out_path) {
    bool all = true;
    ordered_json rep;
    rep["schema"] = kSchemaVersion;
    rep["suite"] = suite;
    rep["params"] = params;
    rep["checks"] = ordered_json::array();
    for (const Check& c : checks) {
        all = all && c.pass;
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.is_null()) cj["detail"] = c.detail;
        rep["checks"].push_back(std::move(cj));
    }
    rep["all_pass"] = all;

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error("cannot open output file: " + out_path);
        os = &file;
    }
    if (format == "text") {
        *os << "suite " << suite << '\n';
        for (const Check& c : checks)
            *os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << '\n';
        *os << (all ? "all checks passed" : "some checks FAILED") << '\n';
    } else {
        *os << rep.dump(2) << '\n';
    }
    return all ? 0 : 1;
}

void suite_theorem2(int r, int s, const Universe& u, std::vector<Check>& checks) {
    UniquenessReport w = theorem2_witness_suite(r, s, u);
    for (const auto& f : w.facts)
        checks.push_back({"ok:" + f.label + ":" + f.graph6, f.pass, {{"expected", f.expected}}});
    if (w.facts.empty()) checks.push_back({"ok:" + w.case_label, w.all_pass, {}});
    UniquenessReport o = theorem2_oo_suite(r, s, u);
    for (const auto& f : o.facts)
        checks.push_back({"oo:" + f.label + ":" + f.graph6, f.pass, {{"expected", f.expected}}});
}

void suite_prop1(const Universe& u, std::vector<Check>& checks) {
    // the two reference properties: geq-closure of {P3, K3}, and +K2
    ClosureFlags geq;
    geq.geq_hereditary = true;
    auto seed = Property::finite_set({path_graph(3), complete_graph(3)});
    auto p1 = Property::from_view(geq_closure(materialize(*seed, u)), geq);
    auto p2 = Property::plus_g(complete_graph(2));
    for (auto& [tag, p] : {std::pair<const char*, PropertyPtr>{"geq{P3,K3}", p1},
                           {"+K2", p2}}) {
        GeqFactorisationReport rep = primitive_factorisation_geq(*p, u);
        checks.push_back({std::string(tag) + ":product_equal", rep.product_equal, {}});
        bool prim = true;
        for (bool b : rep.primitive) prim = prim && b;
        checks.push_back({std::string(tag) + ":factors_primitive", prim, {}});
        bool minimal = true;  // dropping any factor must break equality
        for (std::size_t i = 0; i < rep.factors.size() && rep.factors.size() > 1; ++i) {
            std::vector<PropertyPtr> rest;
            for (std::size_t j = 0; j < rep.factors.size(); ++j)
                if (j != i) rest.push_back(rep.factors[j]);
            if (product_view(rest, u) == materialize(*p, u)) minimal = false;
        }
        checks.push_back({std::string(tag) + ":minimal", minimal, {}});
    }
}

void suite_lemma5(const Universe& u, std::vector<Check>& checks) {
    auto bip = Property::builtin("bipartite");
    auto O = Property::builtin("O");
    for (const Graph& g : m_star(*bip, u)) {
        MaxCharVerdict v = check_max_char(g, {O, O}, u);
        bool ok = v.in_maximal && v.partition_clause && v.mstar_clause && v.consistent();
        checks.push_back({"max_char:" + to_graph6(g), ok, {}});
    }
}

void suite_lemma6(const Universe& big, std::vector<Check>& checks) {
    Universe small(std::min(big.max_order() - 1, 5));
    auto bip = Property::builtin("bipartite");
    std::vector<Graph> gs = m_star(*bip, small);
    std::vector<Graph> hs = materialize(*bip, big).members();
    std::size_t pairs = 0, ok = 0;
    for (const Graph& g : gs)
        for (const Graph& h : hs) {
            if (!contains_subgraph(h, g)) continue;
            ++pairs;
            Gen0Verdict v = check_gen0(g, h, *bip, big);
            if (v.dc_ok && (v.dc_h != v.dc_g || v.matched)) ++ok;
        }
    checks.push_back({"gen0:all_comparable_pairs", pairs == ok,
                      {{"pairs", pairs}, {"ok", ok}}});
}

void suite_theorem7(const PropertyPtr& p, const std::string& id, const Universe& u,
                    std::vector<Check>& checks) {
    FactorisationReport rep = factorise_hereditary(*p, u, id);
    checks.push_back({"factor_count_equals_dc",
                      static_cast<int>(rep.factors.size()) == rep.dc, rep.to_json()});
    checks.push_back({"complete_chain", !rep.partial, {}});
    checks.push_back({"product_equal", rep.product_equal, {}});
    for (std::size_t i = 0; i < rep.factors.size(); ++i)
        checks.push_back({"factor_" + std::to_string(i) + "_indecomposable",
                          dc_property(*rep.factors[i], u) == 1, {}});
}

void suite_prop8(const PropertyPtr& p, const Universe& u, std::vector<Check>& checks) {
    Prop8Report r = check_prop8(*p, u);
    checks.push_back({"equality_iff_antichain", r.consistent,
                      {{"f_sub", r.f_sub_count}, {"f_le", r.f_le_count},
                       {"sets_equal", r.sets_equal}, {"antichain", r.f_le_sub_antichain}}});
}

ForbiddenSet load_forbidden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open forbidden set file: " + path);
    return read_forbidden(in);
}

void suite_roundtrips(std::vector<Check>& checks) {
    Universe u5(5), u6(6), u4(4);
    bool g6ok = true, iok = true;
    for (const Graph& g : u5.graphs()) {
        if (from_graph6(to_graph6(g)) != g) g6ok = false;
        if (intersection_graph(intersection_representation(g)) != g) iok = false;
    }
    checks.push_back({"graph6_roundtrip_u5", g6ok, {}});
    checks.push_back({"intersection_roundtrip_u5", iok, {}});
    for (auto& [tag, p, un] :
         {std::tuple<const char*, PropertyPtr, Universe*>{"forests", Property::builtin("forests"),
                                                          &u6},
          {"bounded_order(3)", Property::builtin("bounded_order", 3), &u4}}) {
        ForbiddenSet fle = minimal_forbidden_induced(*p, *un);
        ForbiddenSet fsub = minimal_forbidden_subgraph(*p, *un);
        checks.push_back({std::string(tag) + ":induced_to_subgraph",
                          induced_to_subgraph(fle).graphs == fsub.graphs, {}});
        checks.push_back({std::string(tag) + ":subgraph_to_induced",
                          subgraph_to_induced(fsub, *un).graphs == fle.graphs, {}});
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph property workbench"};
    app.require_subcommand(1);

    int n = 7, r = 2, s = 2;
    std::string property_id, props_path, forbidden_path, format = "json", out_path, graph6;

    auto* enumerate = app.add_subcommand("enumerate", "list all graphs of order 1..n as graph6");
    enumerate->add_option("--n", n, "largest order")->required()->check(CLI::Range(1, 8));

    auto* memberc = app.add_subcommand("member", "decide membership of a graph in a property");
    memberc->add_option("--property", property_id, "property id")->required();
    memberc->add_option("--props", props_path, "property definition file");
    memberc->add_option("--graph", graph6, "graph6 literal (default: read lines from stdin)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", property_id, "suite name")->required();
    std::string verify_property, suite_name;
    verify->add_option("--n", n, "universe cap")->check(CLI::Range(1, 8));
    verify->add_option("--r", r, "factor size r");
    verify->add_option("--s", s, "factor size s");
    verify->add_option("--property", verify_property, "property id");
    verify->add_option("--props", props_path, "property definition file");
    verify->add_option("--forbidden", forbidden_path, "forbidden set file");
    verify->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) {
            Universe u(n);
            u.write_graph6(std::cout);
            return 0;
        }
        if (memberc->parsed()) {
            PropertyPtr p = resolve_property(property_id, props_path);
            auto report = [&](const std::string& g6) {
                MemberResult res = member_ex(*p, from_graph6(g6));
                std::cout << g6 << ' ' << (res.value ? "true" : "false")
                          << (res.truncated ? " (truncated)" : "") << '\n';
            };
            if (!graph6.empty()) {
                report(graph6);
            } else {
                std::string line;
                while (std::getline(std::cin, line))
                    if (!line.empty()) report(line);
            }
            return 0;
        }

        // verify
        const std::string suite = property_id;
        std::vector<Check> checks;
        ordered_json params;
        params["n"] = n;
        if (suite == "theorem2") {
            params["r"] = r;
            params["s"] = s;
            Universe u(n);
            suite_theorem2(r, s, u, checks);
        } else if (suite == "prop1") {
            Universe u(std::min(n, 6));
            suite_prop1(u, checks);
        } else if (suite == "lemma5") {
            Universe u(std::min(n, 6));
            suite_lemma5(u, checks);
        } else if (suite == "lemma6") {
            Universe u(std::min(n, 6));
            suite_lemma6(u, checks);
        } else if (suite == "theorem7") {
            if (verify_property.empty()) throw Error("theorem7 needs --property");
            params["property"] = verify_property;
            Universe u(std::min(n, 6));
            suite_theorem7(resolve_property(verify_property, props_path), verify_property, u,
                           checks);
        } else if (suite == "prop8") {
            if (verify_property.empty()) throw Error("prop8 needs --property");
            params["property"] = verify_property;
            Universe u(std::min(n, 6));
            suite_prop8(resolve_property(verify_property, props_path), u, checks);
        } else if (suite == "prop9") {
            Universe u(std::min(n, 6));
            ForbiddenSet fs;
            if (!forbidden_path.empty()) {
                fs = load_forbidden(forbidden_path);
            } else if (!verify_property.empty()) {
                params["property"] = verify_property;
                fs = minimal_forbidden_subgraph(*resolve_property(verify_property, props_path), u);
            } else {
                throw Error("prop9 needs --forbidden or --property");
            }
            Prop9Verdict v = check_prop9(fs, u);
            checks.push_back({"criterion_matches_equality", v.consistent,
                              {{"criterion", v.criterion}, {"sets_equal", v.sets_equal}}});
        } else if (suite == "prop10") {
            Universe u(std::min(n, 6));
            ForbiddenSet fs;
            if (!forbidden_path.empty()) {
                fs = load_forbidden(forbidden_path);
            } else if (!verify_property.empty()) {
                params["property"] = verify_property;
                fs = minimal_forbidden_induced(*resolve_property(verify_property, props_path), u);
            } else {
                throw Error("prop10 needs --forbidden or --property");
            }
            Prop10Verdict v = check_prop10(fs, u);
            checks.push_back({"criterion_matches_heredity", v.consistent,
                              {{"criterion", v.criterion}, {"hereditary", v.hereditary}}});
        } else if (suite == "roundtrips") {
            suite_roundtrips(checks);
        } else {
            throw Error("unknown suite: " + suite);
        }
        return emit_report(suite, params, checks, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
