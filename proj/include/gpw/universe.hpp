#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gpw/graph.hpp"

namespace gpw {

/// All non-isomorphic graphs of order 1..n, sorted by (order, canonical
/// adjacency), with an index for O(1) lookup. Immutable after construction.
class Universe {
public:
    static constexpr int kMaxEnumerationOrder = 8;

    explicit Universe(int n);

    Universe(const Universe&) = delete;
    Universe& operator=(const Universe&) = delete;

    int max_order() const { return n_; }
    std::size_t size() const { return graphs_.size(); }
    const Graph& graph(std::size_t i) const { return graphs_[i]; }
    const std::vector<Graph>& graphs() const { return graphs_; }
    std::optional<std::size_t> index_of(const Graph& g) const;
    std::size_t index_of_checked(const Graph& g) const;

    /// [first, last) index range of the graphs of order exactly k.
    std::pair<std::size_t, std::size_t> order_range(int k) const;
    std::size_t count_of_order(int k) const;

    std::uint64_t checksum() const { return checksum_; }

    void write_graph6(std::ostream& os) const;

private:
    int n_;
    std::vector<Graph> graphs_;
    std::unordered_map<Graph, std::size_t> index_;
    std::vector<std::size_t> order_start_;  // order_start_[k] = first index of order k
    std::uint64_t checksum_ = 0;
};

/// Membership bit-vector over one universe.
class PropertyView {
public:
    explicit PropertyView(const Universe& u) : u_(&u), bits_(u.size(), 0) {}

    const Universe& universe() const { return *u_; }
    std::size_t size() const { return bits_.size(); }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool b = true) { bits_[i] = b ? 1 : 0; }
    bool contains(const Graph& g) const;
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    std::vector<Graph> members() const;

    bool operator==(const PropertyView& o) const;
    /// First graph on which the two views disagree.
    std::optional<Graph> first_difference(const PropertyView& o) const;
    bool subset_of(const PropertyView& o) const;

    PropertyView operator&(const PropertyView& o) const;
    PropertyView operator|(const PropertyView& o) const;

    /// Hex dump of the bit-vector plus the universe checksum.
    std::string to_hex() const;

private:
    const Universe* u_;
    std::vector<char> bits_;

    void check_same(const PropertyView& o) const;
};

/// Smallest induced-subgraph-closed superset within the universe.
PropertyView induced_hereditary_closure(const PropertyView& v);
/// Upward closure under induced supergraphs within the universe.
PropertyView geq_closure(const PropertyView& v);
/// Smallest subgraph-closed superset (vertex and edge deletions).
PropertyView hereditary_closure_down(const PropertyView& v);

}  // namespace gpw
