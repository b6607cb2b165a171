#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpw/universe.hpp"

namespace gpw {

enum class PropertyKind {
    Builtin,
    ForbiddenInduced,
    ForbiddenSubgraph,
    GeneratedInduced,
    GeneratedSubgraph,
    PlusG,
    MinusG,
    FiniteSet,
    Product,
    UnionOf,
    IntersectionOf,
    Without,
    View,
};

/// Closure certificates. Only set when guaranteed analytically by the kind or
/// verified computationally; the partition solver prunes only on
/// induced_hereditary.
struct ClosureFlags {
    bool induced_hereditary = false;
    bool hereditary = false;
    bool additive = false;
    bool coadditive = false;
    bool geq_hereditary = false;
};

class Property;
using PropertyPtr = std::shared_ptr<const Property>;

/// Intensional property definition. Immutable; share via PropertyPtr.
class Property {
public:
    PropertyKind kind;
    std::string builtin_name;  // Builtin only
    int param = 0;             // Builtin parameter (0 = none / unbounded)
    std::vector<Graph> graphs;     // forbidden/generator/finite sets, PlusG/MinusG singleton,
                                   // Without exclusions
    std::vector<PropertyPtr> factors;  // Product/UnionOf/IntersectionOf members, Without inner
    ClosureFlags flags;

    // View kind: extensional membership over one universe.
    const Universe* view_universe = nullptr;
    std::vector<char> view_bits;

    /// Builtins: O, K (param = size bound, 0 = unbounded), forests, bipartite,
    /// split, bounded_order (param required), path_components,
    /// clique_with_pendants.
    static PropertyPtr builtin(const std::string& name, int param = 0);

    /// Forbidden/generator sets are normalised to antichains on construction;
    /// dropped dominated elements are reported through *dropped if given.
    static PropertyPtr forbidden_induced(std::vector<Graph> set, std::vector<Graph>* dropped = nullptr);
    static PropertyPtr forbidden_subgraph(std::vector<Graph> set, std::vector<Graph>* dropped = nullptr);
    static PropertyPtr generated_induced(std::vector<Graph> set, std::vector<Graph>* dropped = nullptr);
    static PropertyPtr generated_subgraph(std::vector<Graph> set, std::vector<Graph>* dropped = nullptr);
    static PropertyPtr plus_g(const Graph& g);
    static PropertyPtr minus_g(const Graph& g);
    static PropertyPtr finite_set(std::vector<Graph> set);
    static PropertyPtr product(std::vector<PropertyPtr> fs);
    static PropertyPtr union_of(std::vector<PropertyPtr> fs);
    static PropertyPtr intersection_of(std::vector<PropertyPtr> fs);
    static PropertyPtr without(PropertyPtr inner, std::vector<Graph> excluded);
    static PropertyPtr from_view(const PropertyView& v, ClosureFlags certified = {});

private:
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<const Universe*, std::shared_ptr<const PropertyView>> cache_;
    friend PropertyView materialize(const Property&, const Universe&);

public:
    Property() = default;
};

struct MemberResult {
    bool value = false;
    /// GeneratedInduced/GeneratedSubgraph only: the graph is larger than every
    /// generator, so non-membership is by the truncation convention.
    bool truncated = false;
};

/// Exact membership. The null graph is a member of every property (empty
/// partition parts are always allowed).
bool member(const Property& p, const Graph& g);
MemberResult member_ex(const Property& p, const Graph& g);

/// Bit per universe graph; cached per (property, universe).
PropertyView materialize(const Property& p, const Universe& u);

// ---- finite-scale class checks -------------------------------------------

struct ClassCheck {
    bool holds = false;
    /// (g, h): g is a member, h a (induced-)subgraph / union / join outside.
    std::optional<std::pair<Graph, Graph>> counterexample;
};

ClassCheck is_induced_hereditary_up_to(const Property& p, const Universe& u);
ClassCheck is_hereditary_up_to(const Property& p, const Universe& u);
ClassCheck is_geq_hereditary_up_to(const Property& p, const Universe& u);
ClassCheck is_additive_up_to(const Property& p, const Universe& u);
ClassCheck is_coadditive_up_to(const Property& p, const Universe& u);

struct CompositiveCheck {
    bool holds = false;                                      // over verifiable pairs
    std::optional<std::pair<Graph, Graph>> missing_pair;     // refuted pair, if any
    std::size_t unverifiable_pairs = 0;                      // witness would exceed the universe
};

CompositiveCheck is_compositive_up_to(const Property& p, const Universe& u);
CompositiveCheck is_indiscompositive_up_to(const Property& p, const Universe& u);

// ---- generating sets ------------------------------------------------------

/// Generators containing L as an induced subgraph.
std::vector<Graph> gen_filter_L(const std::vector<Graph>& gens, const Graph& L);
/// Generators containing two disjoint copies of L (i.e. an induced 2L).
std::vector<Graph> gen_filter_2L(const std::vector<Graph>& gens, const Graph& L);
/// All graphs made of two disjoint copies of L plus arbitrary cross edges.
std::vector<Graph> two_star(const Graph& L);
/// Generators containing some member of two_star(L) as an induced subgraph.
std::vector<Graph> gen_filter_2star(const std::vector<Graph>& gens, const Graph& L);

struct GenSetCheck {
    bool ok = false;
    std::optional<Graph> uncovered;          // member of p not under any generator
    std::optional<Graph> generator_outside;  // generator not in p
};

GenSetCheck is_generating_set_up_to(const std::vector<Graph>& gens, const Property& p,
                                    const Universe& u);

struct ChainResult {
    std::vector<Graph> chain;  // H1 <= H2 <= ... (induced containment)
    bool generates_all = false;
    std::optional<Graph> stuck_at;  // first member with no containing witness in u
    CompositiveCheck compositivity;
};

/// Greedy ordered generating chain within u. Stops (with a partial chain) when
/// no graph in p within u contains both the chain head and the next member.
ChainResult ordered_generating_chain(const Property& p, const Universe& u);

/// m copies of g with the same cross-edge configuration between every ordered
/// pair of copies. cross lists labelled pairs (x, y): vertex x of the earlier
/// copy is adjacent to vertex y of the later copy.
Graph build_uniform(const Graph& g, const std::vector<std::pair<int, int>>& cross, int copies);

}  // namespace gpw
