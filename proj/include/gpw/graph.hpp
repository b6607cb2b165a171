#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpw {

/// Thrown for precondition violations anywhere in the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subset of a graph's vertices, one bit per vertex in canonical order.
using VertexMask = std::uint32_t;

/// A finite simple unlabelled graph on at most kMaxOrder vertices.
///
/// Values are always stored in canonical labelling, so operator== decides
/// isomorphism and values are usable as map keys directly. The order-0 null
/// graph is representable (used as an empty partition part) but never
/// enumerated.
class Graph {
public:
    static constexpr int kMaxOrder = 18;

    Graph() : n_(0) { rows_.fill(0); }

    /// Builds (and canonicalises) a graph from an arbitrary labelled
    /// adjacency given as bit rows. Rows must be symmetric and irreflexive.
    static Graph from_rows(int n, const std::array<std::uint32_t, kMaxOrder>& rows);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool is_null() const { return n_ == 0; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint32_t row(int v) const { return rows_[v]; }
    int degree(int v) const;
    int edge_count() const;
    VertexMask full_mask() const { return n_ == 32 ? ~0u : ((1u << n_) - 1u); }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::pair<int, int>> non_edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    std::strong_ordering operator<=>(const Graph& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return rows_ <=> o.rows_;
    }

    std::size_t hash() const;

private:
    std::uint8_t n_;
    std::array<std::uint32_t, kMaxOrder> rows_;

    friend Graph canonicalise(int, const std::array<std::uint32_t, Graph::kMaxOrder>&);
};

/// Canonical representative of the isomorphism class of the labelled graph
/// (n, rows). All Graph factories funnel through this.
Graph canonicalise(int n, const std::array<std::uint32_t, Graph::kMaxOrder>& rows);

inline Graph canonical_form(const Graph& g) { return g; }  // values are canonical already
inline bool is_isomorphic(const Graph& a, const Graph& b) { return a == b; }

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexMask keep);
Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);

/// True iff pattern embeds into host as an induced subgraph.
bool contains_induced(const Graph& host, const Graph& pattern);
/// True iff pattern embeds into host edge-preservingly (not necessarily induced).
bool contains_subgraph(const Graph& host, const Graph& pattern);
/// True iff host has two vertex-disjoint induced copies of p1 and p2.
bool contains_disjoint_induced(const Graph& host, const Graph& p1, const Graph& p2);

std::vector<VertexMask> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Named families.
Graph empty_graph(int r);
Graph complete_graph(int r);
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);

}  // namespace gpw

template <>
struct std::hash<gpw::Graph> {
    std::size_t operator()(const gpw::Graph& g) const { return g.hash(); }
};
