#include "gpw/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gpw/graph6.hpp"

namespace gpw {

namespace {

constexpr std::uint64_t kAssignmentGuard = 1ull << 24;

std::vector<Graph> parts_from_masks(const Graph& g, const std::vector<VertexMask>& masks) {
    std::vector<Graph> parts;
    parts.reserve(masks.size());
    for (VertexMask m : masks) parts.push_back(induced_subgraph(g, m));
    return parts;
}

}  // namespace

bool PartitionCertificate::verify(const std::vector<PropertyPtr>& factors) const {
    if (part_masks.size() != factors.size() || parts.size() != factors.size()) return false;
    VertexMask all = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (all & part_masks[i]) return false;  // overlap
        all |= part_masks[i];
        if (induced_subgraph(g, part_masks[i]) != parts[i]) return false;
        if (!member(*factors[i], parts[i])) return false;
    }
    return all == g.full_mask();
}

nlohmann::ordered_json PartitionCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["graph"] = to_graph6(g);
    j["parts"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < part_masks.size(); ++i) {
        nlohmann::ordered_json p;
        std::vector<int> verts;
        for (int v = 0; v < g.order(); ++v)
            if ((part_masks[i] >> v) & 1u) verts.push_back(v);
        p["vertices"] = verts;
        p["graph"] = to_graph6(parts[i]);
        j["parts"].push_back(std::move(p));
    }
    return j;
}

std::optional<PartitionCertificate> find_partition(const Graph& g,
                                                   const std::vector<PropertyPtr>& factors,
                                                   bool allow_pruning) {
    std::size_t k = factors.size();
    if (k == 0) throw Error("find_partition: no factors");
    int n = g.order();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<VertexMask> masks(k, 0);
    std::vector<VertexMask> result;
    bool found = false;

    auto rec = [&](auto&& self, int pos) -> void {
        if (found) return;
        if (pos == n) {
            // leaf re-validation covers factors the incremental check skipped
            for (std::size_t i = 0; i < k; ++i)
                if (!member(*factors[i], induced_subgraph(g, masks[i]))) return;
            result = masks;
            found = true;
            return;
        }
        int v = order[pos];
        for (std::size_t i = 0; i < k && !found; ++i) {
            masks[i] |= 1u << v;
            bool viable = true;
            if (allow_pruning && factors[i]->flags.induced_hereditary)
                viable = member(*factors[i], induced_subgraph(g, masks[i]));
            if (viable) self(self, pos + 1);
            masks[i] &= ~(1u << v);
        }
    };
    rec(rec, 0);

    if (!found) return std::nullopt;
    return PartitionCertificate{g, result, parts_from_masks(g, result)};
}

bool product_membership(const Graph& g, const std::vector<PropertyPtr>& factors) {
    return find_partition(g, factors).has_value();
}

std::vector<PartitionCertificate> enumerate_partitions(const Graph& g,
                                                       const std::vector<PropertyPtr>& factors,
                                                       PartitionMode mode) {
    std::size_t k = factors.size();
    if (k == 0) throw Error("enumerate_partitions: no factors");
    int n = g.order();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > kAssignmentGuard)
            throw Error("enumerate_partitions: assignment count exceeds guard");
    }

    std::vector<PartitionCertificate> out;
    std::vector<std::vector<Graph>> seen;  // essential mode: sorted part multisets
    std::vector<VertexMask> masks(k, 0);

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<Graph> parts = parts_from_masks(g, masks);
            for (std::size_t i = 0; i < k; ++i)
                if (!member(*factors[i], parts[i])) return;
            if (mode == PartitionMode::Essential) {
                std::vector<Graph> key = parts;
                std::sort(key.begin(), key.end());
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
                seen.push_back(std::move(key));
            }
            out.push_back({g, masks, std::move(parts)});
            return;
        }
        for (std::size_t i = 0; i < k; ++i) {
            masks[i] |= 1u << v;
            // prune with partial parts where sound; the leaf re-checks anyway
            if (!factors[i]->flags.induced_hereditary ||
                member(*factors[i], induced_subgraph(g, masks[i])))
                self(self, v + 1);
            masks[i] &= ~(1u << v);
        }
    };
    rec(rec, 0);
    return out;
}

PropertyView product_view(const std::vector<PropertyPtr>& factors, const Universe& u) {
    PropertyView v(u);
    for (std::size_t i = 0; i < u.size(); ++i) v.set(i, product_membership(u.graph(i), factors));
    return v;
}

std::optional<Graph> equal_products_up_to(const std::vector<PropertyPtr>& a,
                                          const std::vector<PropertyPtr>& b, const Universe& u) {
    return product_view(a, u).first_difference(product_view(b, u));
}

}  // namespace gpw
