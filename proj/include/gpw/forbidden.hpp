#pragma once

#include <iosfwd>

#include "gpw/property.hpp"

namespace gpw {

enum class Relation {
    Induced,   // <=  (induced subgraph)
    Subgraph,  // ⊆  (subgraph)
};

/// Canonical antichain of minimal forbidden graphs under one relation.
struct ForbiddenSet {
    Relation relation = Relation::Induced;
    std::vector<Graph> graphs;  // sorted canonically

    std::vector<Graph> of_order(int n) const;
};

/// F<=(P) ∩ u: graphs outside p whose every one-vertex-deleted induced
/// subgraph is in p. Requires an induced-hereditary certificate.
ForbiddenSet minimal_forbidden_induced(const Property& p, const Universe& u);

/// F⊆(P) ∩ u: graphs outside p whose every one-vertex and one-edge deletion
/// is in p. Requires a hereditary certificate.
ForbiddenSet minimal_forbidden_subgraph(const Property& p, const Universe& u);

/// F⊆ = min_⊆(F<=); the per-order refinement is computed too and asserted
/// equal. Input must be a <=-antichain.
ForbiddenSet induced_to_subgraph(const ForbiddenSet& fle);

/// F<= = min_<= { H + any subset of complement edges, H in F⊆ }, truncated
/// to orders within u.
ForbiddenSet subgraph_to_induced(const ForbiddenSet& fsub, const Universe& u);

struct AntichainVerdict {
    bool ok = false;
    std::optional<std::pair<Graph, Graph>> violating;  // (contained, container)
};

AntichainVerdict is_antichain(const std::vector<Graph>& set, Relation rel);

/// Proposition 1 (§7) diagnostics at truncation.
struct Prop8Report {
    std::size_t f_sub_count = 0;
    std::size_t f_le_count = 0;
    bool sets_equal = false;
    bool f_le_sub_antichain = false;           // F<= as a ⊆-antichain
    std::vector<std::pair<int, bool>> per_order_antichain;
    bool consistent = false;  // equality iff antichain, as the proposition states
};

Prop8Report check_prop8(const Property& p, const Universe& u);

/// Proposition 2 (§7): F⊆ = F<= iff every H+e contains some member of F⊆
/// as an induced subgraph.
struct Prop9Verdict {
    bool criterion = false;
    bool sets_equal = false;
    bool consistent = false;
    std::optional<Graph> witness;  // H with a failing non-edge
};

Prop9Verdict check_prop9(const ForbiddenSet& fsub, const Universe& u);

/// Proposition 3 (§7): the property forbidding fle (induced) is hereditary
/// iff every H+e contains some member of fle as an induced subgraph.
struct Prop10Verdict {
    bool criterion = false;
    bool hereditary = false;  // computed directly on u
    bool consistent = false;
    std::optional<Graph> witness;
};

Prop10Verdict check_prop10(const ForbiddenSet& fle, const Universe& u);

/// Additive iff all minimal forbidden graphs connected (at truncation).
struct AdditivityVerdict {
    bool all_connected = false;
    std::optional<Graph> disconnected_witness;
    bool additive = false;
    bool consistent = false;
};

AdditivityVerdict check_additivity_connectedness(const Property& p, const Universe& u);

/// Line format: first line "relation induced|subgraph", then one graph6 per line.
void write_forbidden(std::ostream& os, const ForbiddenSet& fs);
ForbiddenSet read_forbidden(std::istream& is);

}  // namespace gpw
