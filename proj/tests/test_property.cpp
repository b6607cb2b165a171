#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpw/graph6.hpp"
#include "gpw/property.hpp"
#include "oracles.hpp"

using namespace gpw;

TEST_CASE("builtin O and K") {
    auto O = Property::builtin("O"), K = Property::builtin("K");
    CHECK(member(*O, empty_graph(5)));
    CHECK(!member(*O, complete_graph(2)));
    CHECK(member(*K, complete_graph(5)));
    CHECK(!member(*K, path_graph(3)));
    auto O2 = Property::builtin("O", 2), K3 = Property::builtin("K", 3);
    CHECK(member(*O2, empty_graph(2)));
    CHECK(!member(*O2, empty_graph(3)));
    CHECK(member(*K3, complete_graph(3)));
    CHECK(!member(*K3, complete_graph(4)));
    // the null graph belongs to everything
    CHECK(member(*O, Graph()));
    CHECK(member(*K3, Graph()));
}

TEST_CASE("bipartite matches the BFS oracle on all of U6") {
    Universe u(6);
    auto bip = Property::builtin("bipartite");
    for (const Graph& g : u.graphs()) CHECK(member(*bip, g) == oracle::bipartite(g));
}

TEST_CASE("forests and split") {
    auto forests = Property::builtin("forests"), split = Property::builtin("split");
    CHECK(member(*forests, path_graph(6)));
    CHECK(!member(*forests, cycle_graph(4)));
    CHECK(member(*split, complete_graph(4)));
    CHECK(member(*split, path_graph(4)));  // split: clique {middle edge} + stable set
    CHECK(!member(*split, cycle_graph(4)));
    CHECK(!member(*split, disjoint_union(complete_graph(2), complete_graph(2))));
    CHECK(!member(*split, cycle_graph(5)));
}

TEST_CASE("path_components and clique_with_pendants") {
    auto pc = Property::builtin("path_components");
    CHECK(member(*pc, disjoint_union(path_graph(3), path_graph(2))));
    CHECK(!member(*pc, cycle_graph(4)));
    CHECK(!member(*pc, complete_graph(3)));

    auto cwp = Property::builtin("clique_with_pendants");
    CHECK(member(*cwp, complete_graph(4)));
    Graph paw = add_edge(disjoint_union(complete_graph(3), complete_graph(1)), 0, 3);
    CHECK(member(*cwp, paw));  // triangle with one pendant
    CHECK(member(*cwp, path_graph(4)));  // K2 with a pendant at each end
    CHECK(!member(*cwp, path_graph(5)));
    CHECK(!member(*cwp, cycle_graph(4)));
}

TEST_CASE("forbidden and generated sets") {
    auto no_k3 = Property::forbidden_induced({complete_graph(3)});
    CHECK(member(*no_k3, cycle_graph(5)));
    CHECK(!member(*no_k3, complete_graph(4)));

    auto no_c4_sub = Property::forbidden_subgraph({cycle_graph(4)});
    CHECK(!member(*no_c4_sub, complete_graph(4)));  // K4 has C4 as a subgraph
    CHECK(member(*no_c4_sub, complete_graph(3)));

    auto gen = Property::generated_induced({path_graph(4)});
    CHECK(member(*gen, path_graph(3)));
    CHECK(!member(*gen, complete_graph(3)));
    // larger than every generator: reported as truncated
    MemberResult r = member_ex(*gen, path_graph(5));
    CHECK(!r.value);
    CHECK(r.truncated);

    // dominated elements are dropped when normalising to an antichain
    std::vector<Graph> dropped;
    auto f = Property::forbidden_induced({path_graph(3), path_graph(4)}, &dropped);
    CHECK(f->graphs.size() == 1);
    CHECK(dropped == std::vector<Graph>{path_graph(4)});
}

TEST_CASE("plus, minus, finite, compound kinds") {
    auto plus = Property::plus_g(complete_graph(3));
    CHECK(member(*plus, complete_graph(4)));
    CHECK(!member(*plus, cycle_graph(5)));

    auto minus = Property::minus_g(complete_graph(3));
    CHECK(member(*minus, cycle_graph(5)));
    CHECK(!member(*minus, complete_graph(4)));

    auto fin = Property::finite_set({path_graph(3), complete_graph(3)});
    CHECK(member(*fin, path_graph(3)));
    CHECK(!member(*fin, path_graph(4)));

    auto O = Property::builtin("O");
    auto uni = Property::union_of({O, Property::builtin("K")});
    CHECK(member(*uni, complete_graph(4)));
    CHECK(!member(*uni, path_graph(3)));

    auto inter = Property::intersection_of({Property::builtin("forests"),
                                            Property::builtin("split")});
    CHECK(member(*inter, path_graph(4)));
    CHECK(!member(*inter, cycle_graph(6)));

    auto wo = Property::without(O, {empty_graph(2)});
    CHECK(member(*wo, empty_graph(3)));
    CHECK(!member(*wo, empty_graph(2)));
}

TEST_CASE("product membership: 2-colourable equals bipartite") {
    Universe u(6);
    auto two_col = Property::product({Property::builtin("O"), Property::builtin("O")});
    for (const Graph& g : u.graphs()) CHECK(member(*two_col, g) == oracle::bipartite(g));
}

TEST_CASE("materialize caches and matches member") {
    Universe u(5);
    auto split = Property::builtin("split");
    PropertyView v = materialize(*split, u);
    for (std::size_t i = 0; i < u.size(); ++i)
        CHECK(v.test(i) == member(*split, u.graph(i)));
    CHECK(materialize(*split, u) == v);  // cached call, same bits
}

TEST_CASE("class checks on known classes") {
    Universe u(5);
    CHECK(is_induced_hereditary_up_to(*Property::builtin("bipartite"), u).holds);
    CHECK(is_hereditary_up_to(*Property::builtin("forests"), u).holds);
    CHECK(is_additive_up_to(*Property::builtin("O"), u).holds);
    CHECK(!is_coadditive_up_to(*Property::builtin("O"), u).holds);
    CHECK(is_coadditive_up_to(*Property::builtin("K"), u).holds);
    CHECK(is_geq_hereditary_up_to(*Property::plus_g(complete_graph(2)), u).holds);
    CHECK(!is_geq_hereditary_up_to(*Property::builtin("O"), u).holds);
}

TEST_CASE("compositivity checks") {
    Universe u(6);
    CompositiveCheck c = is_compositive_up_to(*Property::builtin("O"), u);
    CHECK(c.holds);  // K_a u K_b... no: O is additive, any two stable sets unite
    CHECK(!is_compositive_up_to(*Property::finite_set({complete_graph(2), empty_graph(2)}), u)
               .holds);
}

TEST_CASE("generator filters and 2-star") {
    std::vector<Graph> gens = {path_graph(3), path_graph(5), cycle_graph(6)};
    CHECK(gen_filter_L(gens, path_graph(4)).size() == 2);  // P5 and C6 contain P4
    CHECK(gen_filter_2L(gens, complete_graph(2)).size() == 2);  // P5, C6 have 2 disjoint K2

    std::vector<Graph> ts = two_star(complete_graph(2));
    // two disjoint edges plus any cross edges: 2K2, P4, C4, ... (up to iso)
    CHECK(std::find(ts.begin(), ts.end(),
                    disjoint_union(complete_graph(2), complete_graph(2))) != ts.end());
    CHECK(std::find(ts.begin(), ts.end(), cycle_graph(4)) != ts.end());
}

TEST_CASE("generating set check and ordered chain") {
    Universe u(4);
    auto forests = Property::builtin("forests");
    GenSetCheck bad = is_generating_set_up_to({path_graph(4)}, *forests, u);
    CHECK(!bad.ok);  // K_{1,3} is a forest not induced in P4
    CHECK(bad.uncovered.has_value());
    GenSetCheck good = is_generating_set_up_to({empty_graph(4)}, *Property::builtin("O"), u);
    CHECK(good.ok);
    // a generator outside the property is rejected
    CHECK(!is_generating_set_up_to({complete_graph(2)}, *Property::builtin("O"), u).ok);

    ChainResult chain = ordered_generating_chain(*Property::builtin("O"), u);
    CHECK(chain.generates_all);
    for (std::size_t i = 1; i < chain.chain.size(); ++i)
        CHECK(contains_induced(chain.chain[i], chain.chain[i - 1]));
}

TEST_CASE("uniform graphs") {
    // 3 copies of K2 with no cross edges: 3K2
    Graph g = build_uniform(complete_graph(2), {}, 3);
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 3);
    // full cross configuration between copies of K1 gives a complete graph
    CHECK(build_uniform(complete_graph(1), {{0, 0}}, 4) == complete_graph(4));
}
