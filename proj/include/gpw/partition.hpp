#pragma once

#include "json.hpp"

#include "gpw/property.hpp"

namespace gpw {

/// Witness for g in P1 o ... o Pk: part[i] is the vertex set assigned to Pi
/// (empty parts allowed), parts[i] the induced subgraph it carries.
struct PartitionCertificate {
    Graph g;
    std::vector<VertexMask> part_masks;
    std::vector<Graph> parts;

    /// Re-checks the certificate against the factors from scratch.
    bool verify(const std::vector<PropertyPtr>& factors) const;

    nlohmann::ordered_json to_json() const;
};

/// First (P1,...,Pk)-partition found, if any. Backtracks over vertices in
/// descending-degree order; prunes on partial parts only for factors with an
/// induced-hereditary certificate unless allow_pruning is false.
std::optional<PartitionCertificate> find_partition(const Graph& g,
                                                   const std::vector<PropertyPtr>& factors,
                                                   bool allow_pruning = true);

bool product_membership(const Graph& g, const std::vector<PropertyPtr>& factors);

enum class PartitionMode {
    Labelled,   // assignments counted as vertex->index maps
    Essential,  // dedup by the multiset of canonical parts
};

/// All (P1,...,Pk)-partitions of g. Throws if k^n exceeds the assignment guard.
std::vector<PartitionCertificate> enumerate_partitions(const Graph& g,
                                                       const std::vector<PropertyPtr>& factors,
                                                       PartitionMode mode);

/// Membership view of the product over u.
PropertyView product_view(const std::vector<PropertyPtr>& factors, const Universe& u);

/// Extensional equality of two products over u; returns the first
/// disagreement, if any.
std::optional<Graph> equal_products_up_to(const std::vector<PropertyPtr>& a,
                                          const std::vector<PropertyPtr>& b, const Universe& u);

}  // namespace gpw
