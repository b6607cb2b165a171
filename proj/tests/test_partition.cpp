#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpw/partition.hpp"
#include "oracles.hpp"

using namespace gpw;

namespace {
std::vector<PropertyPtr> OO() { return {Property::builtin("O"), Property::builtin("O")}; }
std::vector<PropertyPtr> OK() { return {Property::builtin("O"), Property::builtin("K")}; }
}  // namespace

TEST_CASE("solver agrees with the k^n oracle on all of U6") {
    Universe u(6);
    std::vector<std::vector<PropertyPtr>> suites = {
        OK(),
        OO(),
        {Property::builtin("O", 2), Property::builtin("K", 2)},
    };
    for (const auto& ps : suites)
        for (const Graph& g : u.graphs()) {
            bool got = product_membership(g, ps);
            CHECK(got == oracle::partition_exists(g, ps));
            // pruning must not change verdicts
            CHECK(got == find_partition(g, ps, /*allow_pruning=*/false).has_value());
        }
}

TEST_CASE("certificates verify and carry the right parts") {
    Graph p4 = path_graph(4);
    auto cert = find_partition(p4, OK());
    REQUIRE(cert.has_value());  // P4: middle edge as the clique, ends stable
    CHECK(cert->verify(OK()));
    CHECK(cert->part_masks.size() == 2);
    CHECK((cert->part_masks[0] | cert->part_masks[1]) == p4.full_mask());
    CHECK((cert->part_masks[0] & cert->part_masks[1]) == 0u);

    // K4 is not 2-colourable
    CHECK(!find_partition(complete_graph(4), OO()).has_value());

    // null graph: empty partition always works
    CHECK(product_membership(Graph(), OO()));
}

TEST_CASE("certificate JSON names the parts") {
    auto cert = find_partition(cycle_graph(4), OO());
    REQUIRE(cert.has_value());
    auto j = cert->to_json();
    CHECK(j.contains("graph"));
    CHECK(j["parts"].size() == 2);
}

TEST_CASE("labelled vs essential enumeration") {
    // K2 under (O, O): labelled has 2 assignments (swap parts), essential 1
    Graph k2 = complete_graph(2);
    CHECK(enumerate_partitions(k2, OO(), PartitionMode::Labelled).size() == 2);
    CHECK(enumerate_partitions(k2, OO(), PartitionMode::Essential).size() == 1);

    // C4 under (O, O): the bipartition is unique essentially
    CHECK(enumerate_partitions(cycle_graph(4), OO(), PartitionMode::Essential).size() == 1);

    // 2K1 under (O, O): both together (other part empty) or one each
    CHECK(enumerate_partitions(empty_graph(2), OO(), PartitionMode::Essential).size() == 2);
}

TEST_CASE("product view and product equality") {
    Universe u(5);
    PropertyView bip = materialize(*Property::builtin("bipartite"), u);
    CHECK(product_view(OO(), u) == bip);
    CHECK(!equal_products_up_to(OO(), OO(), u).has_value());
    auto diff = equal_products_up_to(
        OO(), {Property::builtin("O"), Property::builtin("O"), Property::builtin("O")}, u);
    REQUIRE(diff.has_value());
    CHECK(*diff == complete_graph(3));
}

TEST_CASE("split graphs are exactly the (O, K) graphs") {
    Universe u(6);
    PropertyView split = materialize(*Property::builtin("split"), u);
    CHECK(product_view(OK(), u) == split);
}
