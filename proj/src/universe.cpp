#include "gpw/universe.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <unordered_set>

#include "gpw/graph6.hpp"

namespace gpw {

Universe::Universe(int n) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error("universe order must be in 1.." + std::to_string(kMaxEnumerationOrder));

    // Incremental vertex extension: every graph of order k+1 is some order-k
    // graph plus one vertex with an arbitrary neighbourhood.
    std::vector<Graph> prev = {empty_graph(1)};
    graphs_ = prev;
    for (int k = 1; k < n; ++k) {
        std::unordered_set<Graph> next;
        for (const Graph& g : prev) {
            std::array<std::uint32_t, Graph::kMaxOrder> rows{};
            for (int v = 0; v < k; ++v) rows[v] = g.row(v);
            for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
                for (int v = 0; v < k; ++v)
                    rows[v] = (g.row(v) & ~(1u << k)) | (((nb >> v) & 1u) << k);
                rows[k] = nb;
                next.insert(canonicalise(k + 1, rows));
            }
        }
        prev.assign(next.begin(), next.end());
        graphs_.insert(graphs_.end(), prev.begin(), prev.end());
    }
    std::sort(graphs_.begin(), graphs_.end());

    order_start_.assign(n_ + 2, graphs_.size());
    for (std::size_t i = graphs_.size(); i-- > 0;) {
        index_[graphs_[i]] = i;
        order_start_[graphs_[i].order()] = i;
    }
    for (const Graph& g : graphs_) checksum_ = checksum_ * 1000003u ^ g.hash();
}

std::optional<std::size_t> Universe::index_of(const Graph& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Universe::index_of_checked(const Graph& g) const {
    auto i = index_of(g);
    if (!i) throw Error("graph not in universe");
    return *i;
}

std::pair<std::size_t, std::size_t> Universe::order_range(int k) const {
    if (k < 1 || k > n_) return {0, 0};
    return {order_start_[k], k == n_ ? graphs_.size() : order_start_[k + 1]};
}

std::size_t Universe::count_of_order(int k) const {
    auto [a, b] = order_range(k);
    return b - a;
}

void Universe::write_graph6(std::ostream& os) const {
    for (const Graph& g : graphs_) os << to_graph6(g) << '\n';
}

bool PropertyView::contains(const Graph& g) const {
    auto i = u_->index_of(g);
    return i && test(*i);
}

std::size_t PropertyView::count() const {
    std::size_t c = 0;
    for (char b : bits_) c += b != 0;
    return c;
}

std::vector<Graph> PropertyView::members() const {
    std::vector<Graph> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(u_->graph(i));
    return out;
}

void PropertyView::check_same(const PropertyView& o) const {
    if (u_ != o.u_) throw Error("views belong to different universes");
}

bool PropertyView::operator==(const PropertyView& o) const {
    check_same(o);
    return bits_ == o.bits_;
}

std::optional<Graph> PropertyView::first_difference(const PropertyView& o) const {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] != o.bits_[i]) return u_->graph(i);
    return std::nullopt;
}

bool PropertyView::subset_of(const PropertyView& o) const {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !o.bits_[i]) return false;
    return true;
}

PropertyView PropertyView::operator&(const PropertyView& o) const {
    check_same(o);
    PropertyView r(*u_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

PropertyView PropertyView::operator|(const PropertyView& o) const {
    check_same(o);
    PropertyView r(*u_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

std::string PropertyView::to_hex() const {
    static const char* hex = "0123456789abcdef";
    std::string s;
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
        int nib = 0;
        for (std::size_t j = 0; j < 4 && i + j < bits_.size(); ++j)
            if (bits_[i + j]) nib |= 1 << j;
        s.push_back(hex[nib]);
    }
    s += ":u";
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(u_->checksum()));
    s += buf;
    return s;
}

PropertyView induced_hereditary_closure(const PropertyView& v) {
    const Universe& u = v.universe();
    PropertyView out = v;
    // one-vertex deletions, processed large to small
    for (std::size_t i = u.size(); i-- > 0;) {
        if (!out.test(i)) continue;
        const Graph& g = u.graph(i);
        if (g.order() <= 1) continue;
        for (int w = 0; w < g.order(); ++w)
            out.set(u.index_of_checked(delete_vertex(g, w)));
    }
    return out;
}

PropertyView geq_closure(const PropertyView& v) {
    const Universe& u = v.universe();
    PropertyView out = v;
    // h is in the closure iff h itself is, or some one-vertex-deleted induced
    // subgraph is; small to large makes one pass suffice.
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (out.test(i)) continue;
        const Graph& g = u.graph(i);
        for (int w = 0; w < g.order() && g.order() > 1; ++w)
            if (out.test(u.index_of_checked(delete_vertex(g, w)))) {
                out.set(i);
                break;
            }
    }
    return out;
}

PropertyView hereditary_closure_down(const PropertyView& v) {
    const Universe& u = v.universe();
    PropertyView out = v;
    // order descending, then edge count descending: vertex deletion lowers
    // order, edge deletion lowers the edge count at the same order.
    for (int k = u.max_order(); k >= 1; --k) {
        auto [a, b] = u.order_range(k);
        std::vector<std::size_t> idx;
        for (std::size_t i = a; i < b; ++i) idx.push_back(i);
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return u.graph(x).edge_count() > u.graph(y).edge_count();
        });
        for (std::size_t i : idx) {
            if (!out.test(i)) continue;
            const Graph& g = u.graph(i);
            if (g.order() > 1)
                for (int w = 0; w < g.order(); ++w)
                    out.set(u.index_of_checked(delete_vertex(g, w)));
            for (auto [x, y] : g.edges()) out.set(u.index_of_checked(delete_edge(g, x, y)));
        }
    }
    return out;
}

}  // namespace gpw
