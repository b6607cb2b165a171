// End-to-end acceptance gate: one numbered criterion per test case, each
// printing a single pass/fail line. Expected values were computed with
// independent brute-force oracles (see oracles.hpp) and frozen here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>

#include "gpw/decomp.hpp"
#include "gpw/factorlab.hpp"
#include "gpw/forbidden.hpp"
#include "gpw/graph6.hpp"
#include "oracles.hpp"

using namespace gpw;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const char* what, bool ok) {
    std::printf("criterion %2d [%s]: %s\n", id, what, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

PropertyPtr O() { return Property::builtin("O"); }

}  // namespace

TEST_CASE("1: universe counts vs labelled dedup oracle") {
    auto t0 = std::chrono::steady_clock::now();
    Universe u(7);
    const std::size_t expect[] = {1, 2, 4, 11, 34, 156, 1044};
    bool ok = true;
    for (int k = 1; k <= 7; ++k) ok = ok && u.count_of_order(k) == expect[k - 1];
    // recount orders 1..5 with the n!-dedup oracle on the spot
    for (int k = 1; k <= 5; ++k) ok = ok && oracle::all_graphs(k).size() == expect[k - 1];
    ok = ok && seconds_since(t0) < 10.0;
    report(1, "universe counts", ok);
}

TEST_CASE("2: partition solver vs exhaustive oracle on U6") {
    auto t0 = std::chrono::steady_clock::now();
    Universe u(6);
    std::vector<std::vector<PropertyPtr>> suites = {
        {O(), Property::builtin("K")},
        {O(), O()},
        {Property::builtin("O", 2), Property::builtin("K", 2)},
    };
    bool ok = true;
    for (const auto& ps : suites)
        for (const Graph& g : u.graphs())
            ok = ok && product_membership(g, ps) == oracle::partition_exists(g, ps);
    ok = ok && seconds_since(t0) < 60.0;
    report(2, "partition solver vs oracle", ok);
}

TEST_CASE("3: Theorem 2 witness suites") {
    Universe u(7);
    bool ok = true;
    for (int r = 2; r <= 3; ++r)
        for (int s = 2; s <= 3; ++s) ok = ok && theorem2_witness_suite(r, s, u).all_pass;
    ok = ok && theorem2_oo_suite(2, 2, u).all_pass;
    ok = ok && theorem2_oo_suite(2, 3, u).all_pass;
    report(3, "theorem 2 suites", ok);
}

TEST_CASE("4: non-uniqueness constructions on U7") {
    Universe u(7);
    bool ok = true;
    auto check_branch = [&](const PropertyPtr& p1, const PropertyPtr& p2) {
        UniquenessReport rep = nonuniqueness_witness(p1, p2, u);
        ok = ok && rep.product_equal && rep.factor_difference.has_value();
    };
    check_branch(Property::without(O(), {empty_graph(5)}), O());  // (a) non-IH factor
    check_branch(Property::generated_induced({path_graph(3)}), O());  // (b) K2, K2bar inside
    check_branch(O(), Property::builtin("K"));                        // (c) O / K factor
    report(4, "non-uniqueness branches", ok);
}

TEST_CASE("5: Proposition 1 primitive factorisations on U6") {
    Universe u(6);
    ClosureFlags geq;
    geq.geq_hereditary = true;
    auto seed = Property::finite_set({path_graph(3), complete_graph(3)});
    std::vector<PropertyPtr> ps = {
        Property::from_view(geq_closure(materialize(*seed, u)), geq),
        Property::plus_g(complete_graph(2)),
    };
    bool ok = true;
    for (const auto& p : ps) {
        GeqFactorisationReport rep = primitive_factorisation_geq(*p, u);
        ok = ok && rep.product_equal;
        for (bool b : rep.primitive) ok = ok && b;
        for (std::size_t i = 0; i < rep.factors.size() && rep.factors.size() > 1; ++i) {
            std::vector<PropertyPtr> rest;
            for (std::size_t j = 0; j < rep.factors.size(); ++j)
                if (j != i) rest.push_back(rep.factors[j]);
            ok = ok && product_view(rest, u) != materialize(*p, u);  // minimality
        }
    }
    report(5, "proposition 1 factorisations", ok);
}

TEST_CASE("6: Theorem 7 factorisations at desk scale") {
    Universe u(6);
    PropertyView stable = materialize(*O(), u);
    bool ok = true;

    FactorisationReport bip = factorise_hereditary(*Property::builtin("bipartite"), u);
    ok = ok && bip.factors.size() == 2 && bip.product_equal && !bip.partial;
    for (const PropertyView& f : bip.factor_views) ok = ok && f == stable;

    FactorisationReport tc =
        factorise_hereditary(*Property::product({O(), O(), O()}), u);
    ok = ok && tc.factors.size() == 3 && tc.product_equal && !tc.partial;
    for (const PropertyView& f : tc.factor_views) ok = ok && f == stable;

    FactorisationReport fo = factorise_hereditary(*Property::builtin("forests"), u);
    ok = ok && fo.dc == 1 && fo.factors.size() == 1 && fo.product_equal;

    report(6, "theorem 7 factorisations", ok);
}

TEST_CASE("7: lemmas 5 and 6") {
    Universe u6(6), u5(5);
    auto bip = Property::builtin("bipartite");
    bool ok = true;
    for (const Graph& g : m_star(*bip, u6)) {
        MaxCharVerdict v = check_max_char(g, {O(), O()}, u6);
        ok = ok && v.in_maximal && v.partition_clause && v.mstar_clause && v.consistent();
    }
    for (const Graph& g : m_star(*bip, u5))
        for (const Graph& h : materialize(*bip, u6).members()) {
            if (!contains_subgraph(h, g)) continue;
            Gen0Verdict v = check_gen0(g, h, *bip, u6);
            ok = ok && v.dc_ok && (v.dc_h != v.dc_g || v.matched);
        }
    report(7, "lemmas 5-6", ok);
}

TEST_CASE("8: section 7 forbidden-set conversions") {
    Universe u6(6), u4(4), u5(5);
    bool ok = true;

    std::vector<Graph> cycles;
    for (int k = 3; k <= 6; ++k) cycles.push_back(cycle_graph(k));
    std::sort(cycles.begin(), cycles.end());
    auto forests = Property::builtin("forests");
    ForbiddenSet fle_f = minimal_forbidden_induced(*forests, u6);
    ForbiddenSet fsub_f = minimal_forbidden_subgraph(*forests, u6);
    ok = ok && fle_f.graphs == cycles && fsub_f.graphs == cycles;

    auto bo3 = Property::builtin("bounded_order", 3);
    ForbiddenSet fle_b = minimal_forbidden_induced(*bo3, u4);
    ForbiddenSet fsub_b = minimal_forbidden_subgraph(*bo3, u4);
    ok = ok && fle_b.graphs.size() == 11 && fsub_b.graphs == std::vector<Graph>{empty_graph(4)};

    ok = ok && induced_to_subgraph(fle_f).graphs == fsub_f.graphs;
    ok = ok && subgraph_to_induced(fsub_f, u6).graphs == fle_f.graphs;
    ok = ok && induced_to_subgraph(fle_b).graphs == fsub_b.graphs;
    ok = ok && subgraph_to_induced(fsub_b, u4).graphs == fle_b.graphs;

    ok = ok && check_prop9(fsub_f, u6).consistent && check_prop10(fle_f, u6).consistent;
    ok = ok && check_prop9(fsub_b, u4).consistent && check_prop10(fle_b, u4).consistent;
    // split is not hereditary: no F-sub exists, and the prop 10 criterion must
    // come out false yet consistent with the direct heredity check
    auto split = Property::builtin("split");
    Prop10Verdict sp = check_prop10(minimal_forbidden_induced(*split, u5), u5);
    ok = ok && sp.consistent && !sp.criterion && !sp.hereditary;

    report(8, "forbidden-set conversions", ok);
}

TEST_CASE("9: dc superadditivity") {
    Universe u(6);
    auto bip = Property::builtin("bipartite");
    auto forests = Property::builtin("forests");
    bool ok = true;
    for (auto& [a, b] :
         {std::pair<PropertyPtr, PropertyPtr>{O(), O()}, {O(), bip}, {forests, O()}})
        ok = ok && check_dc_superadditive(a, b, u).consistent;
    report(9, "dc superadditivity", ok);
}

TEST_CASE("10: intersection representation roundtrip") {
    Universe u(5);
    bool ok = u.size() == 52;
    for (const Graph& g : u.graphs())
        ok = ok && intersection_graph(intersection_representation(g)) == g;
    report(10, "intersection roundtrip", ok);
}

TEST_CASE("11: class checks for split and clique_with_pendants") {
    Universe u6(6), u7(7);
    auto split = Property::builtin("split");
    bool ok = is_induced_hereditary_up_to(*split, u6).holds;
    ok = ok && !is_hereditary_up_to(*split, u6).holds;     // e.g. diamond ⊇ C4
    ok = ok && !is_additive_up_to(*split, u6).holds;       // K2 u K2 = 2K2 not split
    ok = ok && !is_coadditive_up_to(*split, u6).holds;     // K2bar + K2bar = C4 not split
    ok = ok && is_hereditary_up_to(*split, u6).counterexample.has_value();
    ok = ok && is_additive_up_to(*split, u6).counterexample.has_value();
    ok = ok && is_coadditive_up_to(*split, u6).counterexample.has_value();

    auto cwp = Property::builtin("clique_with_pendants");
    CompositiveCheck ic = is_indiscompositive_up_to(*cwp, u7);
    ok = ok && ic.holds && !ic.missing_pair.has_value();
    ok = ok && !is_additive_up_to(*cwp, u7).holds;
    ok = ok && !is_coadditive_up_to(*cwp, u7).holds;
    report(11, "class checks", ok);
}
