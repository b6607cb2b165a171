#pragma once

#include "json.hpp"

#include "gpw/partition.hpp"

namespace gpw {

/// g as the join of its indecomposable parts (complements of the components
/// of the complement). Parts are canonically sorted; masks index g's
/// labelling.
struct JoinDecomposition {
    std::vector<Graph> ind_parts;
    std::vector<VertexMask> part_masks;  // aligned with ind_parts
    int dc = 0;
};

JoinDecomposition ind_parts(const Graph& g);

/// c(P): the largest c with K_c in P. Throws when no bound is visible within
/// the universe (K_{n+1} still in P).
int clique_bound(const Property& p, const Universe& u);

/// M(P) ∩ u: members no single edge addition keeps in P.
std::vector<Graph> p_maximal(const Property& p, const Universe& u);

/// M*(P) ∩ u: P-maximal graphs with at least c(P) vertices. The join
/// characterization (K1 + G not in P) is cross-checked and must agree.
std::vector<Graph> m_star(const Property& p, const Universe& u);

/// dc(P) truncated to u: min dc over M*(P) ∩ u. An upper bound for the true
/// value. Throws when M* ∩ u is empty.
int dc_property(const Property& p, const Universe& u);

struct MaxCharVerdict {
    bool in_maximal = false;        // g in M(prod props)
    bool partition_clause = false;  // every partition: parts maximal, g = join of parts
    bool mstar_clause = false;      // every partition: nonempty parts in M*(Pi)
    std::size_t partitions = 0;
    bool consistent() const { return in_maximal == partition_clause; }
};

/// Executable Lemma 5 for one graph. All props must carry a hereditary
/// certificate.
MaxCharVerdict check_max_char(const Graph& g, const std::vector<PropertyPtr>& props,
                              const Universe& u);

struct Gen0Verdict {
    int dc_g = 0;
    int dc_h = 0;
    bool dc_ok = false;  // dc(h) <= dc(g)
    /// dc-equal case: matching[i] = index of h's part containing g's part i
    /// (induced). Empty when dc differs or no perfect matching exists.
    std::vector<int> matching;
    bool matched = false;
};

/// Executable Lemma 6: g in M*(p), h in p, g a subgraph of h.
Gen0Verdict check_gen0(const Graph& g, const Graph& h, const Property& p, const Universe& u);

struct FactorisationReport {
    std::string property_id;
    int dc = 0;
    std::vector<Graph> chain;                    // P-maximal chain used
    std::vector<std::vector<Graph>> part_chains; // aligned ind-part chain per factor
    std::vector<PropertyPtr> factors;
    std::vector<PropertyView> factor_views;
    bool product_equal = false;
    std::optional<Graph> first_difference;
    bool input_additive = false;
    std::vector<bool> factor_additive;           // only when input_additive
    bool partial = false;                        // chain could not be grown far enough

    nlohmann::ordered_json to_json() const;
};

/// Theorem 7 at desk scale: factorise a hereditary compositive property into
/// dc(P) hereditary factors and re-verify the product on u.
FactorisationReport factorise_hereditary(const Property& p, const Universe& u,
                                         const std::string& property_id = "");

struct SuperadditiveVerdict {
    int dc_a = 0;
    int dc_b = 0;
    int dc_product = 0;
    bool consistent = false;  // dc(a o b) >= dc(a) + dc(b)
};

SuperadditiveVerdict check_dc_superadditive(const PropertyPtr& a, const PropertyPtr& b,
                                            const Universe& u);

}  // namespace gpw
