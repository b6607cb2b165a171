#pragma once

#include <iosfwd>
#include <set>

#include "json.hpp"

#include "gpw/partition.hpp"

namespace gpw {

/// Non-null members of p with no proper induced subgraph in p.
std::vector<Graph> min_graphs(const Property& p, const Universe& u);

struct GeqFactorisationReport {
    std::vector<Graph> mins;
    std::vector<PropertyPtr> factors;  // +G for each G in mins
    std::vector<bool> primitive;       // |min(+G)| == 1 per factor
    bool product_equal = false;
    std::optional<Graph> first_difference;
};

/// Proposition 1: a ≥-hereditary property is the product of +G over its
/// minimal graphs. Verified extensionally on u.
GeqFactorisationReport primitive_factorisation_geq(const Property& p, const Universe& u);

struct UnionProductVerdict {
    bool cover_geq_hereditary = false;
    bool union_equal = false;
    bool product_equal = false;
    bool ok() const { return cover_geq_hereditary && union_equal && product_equal; }
};

/// §2: if p is ≥-hereditary and p = p1 ∪ p2 then p = p1 ∘ p2.
UnionProductVerdict union_is_product_geq(const Property& p,
                                         const std::vector<PropertyView>& cover,
                                         const Universe& u);

struct WitnessFact {
    std::string label;
    std::string graph6;
    std::string expected;
    bool pass = false;
};

struct UniquenessReport {
    std::string case_label;  // "O(r)oK(s)", "O(r)oO(s)", "K(r)oK(s)", branch tag, redirects
    std::vector<WitnessFact> facts;
    bool all_pass = false;

    // nonuniqueness_witness only:
    std::vector<PropertyPtr> alternative;
    std::optional<Graph> factor_difference;  // graph on which some factor pair differs
    bool product_equal = false;

    nlohmann::ordered_json to_json() const;
};

/// Theorem 2 sufficiency facts for O(r) ∘ K(s), r,s ≥ 2 (r=1 or s=1 redirects
/// to case 2/3).
UniquenessReport theorem2_witness_suite(int r, int s, const Universe& u);

/// Theorem 2 sufficiency facts for O(r) ∘ O(s), plus the complement-dual
/// K(r) ∘ K(s) facts.
UniquenessReport theorem2_oo_suite(int r, int s, const Universe& u);

/// Theorem 2 necessity: produce a second factorisation of p1 ∘ p2 via the
/// applicable proof branch. Throws when no branch applies.
UniquenessReport nonuniqueness_witness(const PropertyPtr& p1, const PropertyPtr& p2,
                                       const Universe& u);

/// Finite family of token sets; members keep identity, so equal (even empty)
/// sets stay distinct vertices.
struct IntersectionFamily {
    std::vector<std::string> names;
    std::vector<std::set<std::string>> sets;
};

/// Theorem 3: S_i = the edge tokens incident to vertex i.
IntersectionFamily intersection_representation(const Graph& g);
/// Adjacency iff nonempty intersection of member contents.
Graph intersection_graph(const IntersectionFamily& f);

/// One line per member: "name: tok tok ...".
void write_family(std::ostream& os, const IntersectionFamily& f);
IntersectionFamily read_family(std::istream& is);

}  // namespace gpw
