#include "gpw/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "gpw/graph6.hpp"

namespace gpw {

namespace {

using Rows = std::array<std::uint32_t, Graph::kMaxOrder>;

// Kuhn's augmenting-path matching. ok[i][j]: left part i may map to right
// part j. Returns left->right assignment, or empty if not perfect.
std::vector<int> perfect_matching(const std::vector<std::vector<char>>& ok) {
    int n = static_cast<int>(ok.size());
    std::vector<int> right_of(n, -1), left_of(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen(n, 0);
        auto aug = [&](auto&& self, int l) -> bool {
            for (int r = 0; r < n; ++r) {
                if (!ok[l][r] || seen[r]) continue;
                seen[r] = 1;
                if (left_of[r] == -1 || self(self, left_of[r])) {
                    right_of[l] = r;
                    left_of[r] = l;
                    return true;
                }
            }
            return false;
        };
        if (!aug(aug, i)) return {};
    }
    return right_of;
}

bool graph_maximal(const Property& p, const Graph& g) {
    if (!member(p, g)) return false;
    for (auto [u, v] : g.non_edges())
        if (member(p, add_edge(g, u, v))) return false;
    return true;
}

}  // namespace

JoinDecomposition ind_parts(const Graph& g) {
    if (g.order() < 1) throw Error("ind_parts: graph must have at least one vertex");
    JoinDecomposition d;
    // complement components computed on g's own labelling (complement() would
    // re-canonicalise and shuffle vertices under the masks)
    std::vector<VertexMask> comps;
    {
        VertexMask seen = 0, full = g.full_mask();
        for (int v = 0; v < g.order(); ++v) {
            if ((seen >> v) & 1u) continue;
            VertexMask comp = 1u << v, frontier = 1u << v;
            while (frontier) {
                VertexMask next = 0;
                for (int w = 0; w < g.order(); ++w)
                    if ((frontier >> w) & 1u) next |= ~g.row(w) & full & ~(1u << w);
                frontier = next & ~comp;
                comp |= next;
            }
            comps.push_back(comp);
            seen |= comp;
        }
    }
    for (VertexMask m : comps) {
        d.ind_parts.push_back(induced_subgraph(g, m));
        d.part_masks.push_back(m);
    }
    std::vector<std::size_t> idx(d.ind_parts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return d.ind_parts[a] < d.ind_parts[b]; });
    JoinDecomposition out;
    for (std::size_t i : idx) {
        out.ind_parts.push_back(d.ind_parts[i]);
        out.part_masks.push_back(d.part_masks[i]);
    }
    out.dc = static_cast<int>(out.ind_parts.size());
    return out;
}

int clique_bound(const Property& p, const Universe& u) {
    for (int r = 1; r <= u.max_order() + 1; ++r)
        if (!member(p, complete_graph(r))) return r - 1;
    throw Error("clique_bound: no bound within universe");
}

std::vector<Graph> p_maximal(const Property& p, const Universe& u) {
    std::vector<Graph> out;
    for (const Graph& g : materialize(p, u).members())
        if (graph_maximal(p, g)) out.push_back(g);
    return out;
}

std::vector<Graph> m_star(const Property& p, const Universe& u) {
    int c = clique_bound(p, u);
    std::vector<Graph> out;
    for (const Graph& g : p_maximal(p, u)) {
        bool by_order = g.order() >= c;
        if (g.order() + 1 <= Graph::kMaxOrder) {
            bool by_join = !member(p, join(complete_graph(1), g));
            if (by_order != by_join)
                throw Error("m_star: the two characterizations disagree on " + to_graph6(g));
        }
        if (by_order) out.push_back(g);
    }
    return out;
}

int dc_property(const Property& p, const Universe& u) {
    std::vector<Graph> ms = m_star(p, u);
    if (ms.empty()) throw Error("dc_property: M* is empty within the universe");
    int best = Graph::kMaxOrder + 1;
    for (const Graph& g : ms) best = std::min(best, ind_parts(g).dc);
    return best;
}

MaxCharVerdict check_max_char(const Graph& g, const std::vector<PropertyPtr>& props,
                              const Universe& u) {
    for (const auto& p : props)
        if (!p->flags.hereditary) throw Error("check_max_char: factor lacks a hereditary certificate");
    (void)u;

    MaxCharVerdict v;
    v.in_maximal = product_membership(g, props) && [&] {
        for (auto [a, b] : g.non_edges())
            if (product_membership(add_edge(g, a, b), props)) return false;
        return true;
    }();

    std::vector<int> cb(props.size());
    for (std::size_t i = 0; i < props.size(); ++i) cb[i] = clique_bound(*props[i], u);

    auto parts = enumerate_partitions(g, props, PartitionMode::Essential);
    v.partitions = parts.size();
    v.partition_clause = !parts.empty();
    v.mstar_clause = !parts.empty();
    for (const auto& cert : parts) {
        for (std::size_t i = 0; i < props.size(); ++i) {
            const Graph& part = cert.parts[i];
            if (part.is_null()) continue;  // empty parts satisfy the clauses vacuously
            if (!graph_maximal(*props[i], part)) v.partition_clause = false;
            if (!(graph_maximal(*props[i], part) && part.order() >= cb[i])) v.mstar_clause = false;
        }
        // join clause: vertices in distinct parts are pairwise adjacent
        for (std::size_t i = 0; i < props.size() && v.partition_clause; ++i)
            for (std::size_t j = i + 1; j < props.size(); ++j)
                for (int w = 0; w < g.order(); ++w)
                    if ((cert.part_masks[i] >> w) & 1u)
                        if ((g.row(w) & cert.part_masks[j]) != cert.part_masks[j]) {
                            v.partition_clause = false;
                            break;
                        }
    }
    return v;
}

Gen0Verdict check_gen0(const Graph& g, const Graph& h, const Property& p, const Universe& u) {
    if (!u.index_of(g) || !u.index_of(h)) throw Error("check_gen0: graphs must lie in the universe");
    if (!member(p, h)) throw Error("check_gen0: h not in p");
    if (!graph_maximal(p, g) || g.order() < clique_bound(p, u))
        throw Error("check_gen0: g not in M*(p)");
    if (!contains_subgraph(h, g)) throw Error("check_gen0: g not a subgraph of h");

    Gen0Verdict v;
    JoinDecomposition dg = ind_parts(g), dh = ind_parts(h);
    v.dc_g = dg.dc;
    v.dc_h = dh.dc;
    v.dc_ok = dh.dc <= dg.dc;
    if (dh.dc == dg.dc) {
        std::vector<std::vector<char>> ok(dg.dc, std::vector<char>(dg.dc, 0));
        for (int i = 0; i < dg.dc; ++i)
            for (int j = 0; j < dh.dc; ++j)
                ok[i][j] = contains_induced(dh.ind_parts[j], dg.ind_parts[i]);
        v.matching = perfect_matching(ok);
        v.matched = !v.matching.empty();
    }
    return v;
}

nlohmann::ordered_json FactorisationReport::to_json() const {
    nlohmann::ordered_json j;
    j["property"] = property_id;
    j["dc"] = dc;
    j["partial"] = partial;
    j["chain"] = nlohmann::ordered_json::array();
    for (const Graph& g : chain) j["chain"].push_back(to_graph6(g));
    j["factors"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < part_chains.size(); ++i) {
        nlohmann::ordered_json f;
        f["part_chain"] = nlohmann::ordered_json::array();
        for (const Graph& g : part_chains[i]) f["part_chain"].push_back(to_graph6(g));
        if (i < factor_views.size()) f["view"] = factor_views[i].to_hex();
        if (input_additive && i < factor_additive.size()) f["additive"] = (bool)factor_additive[i];
        j["factors"].push_back(std::move(f));
    }
    j["product_equal"] = product_equal;
    if (first_difference) j["first_difference"] = to_graph6(*first_difference);
    return j;
}

FactorisationReport factorise_hereditary(const Property& p, const Universe& u,
                                         const std::string& property_id) {
    if (!is_hereditary_up_to(p, u).holds)
        throw Error("factorise_hereditary: p not hereditary on the universe");
    if (!is_compositive_up_to(p, u).holds)
        throw Error("factorise_hereditary: p not compositive on the universe");

    FactorisationReport rep;
    rep.property_id = property_id;
    PropertyView pview = materialize(p, u);
    rep.input_additive = is_additive_up_to(p, u).holds;

    std::vector<Graph> ms = m_star(p, u);
    if (ms.empty()) throw Error("factorise_hereditary: M* empty within the universe");
    int d = Graph::kMaxOrder + 1;
    Graph J;
    for (const Graph& g : ms) {
        int dcg = ind_parts(g).dc;
        if (dcg < d) {
            d = dcg;
            J = g;
        }
    }
    rep.dc = d;
    rep.chain.push_back(J);

    if (d == 1) {
        ClosureFlags certified;
        certified.hereditary = certified.induced_hereditary = true;
        rep.factors = {Property::from_view(pview, certified)};
        rep.part_chains = {{J}};
    } else {
        JoinDecomposition dec = ind_parts(J);
        rep.part_chains.resize(d);
        for (int i = 0; i < d; ++i) rep.part_chains[i] = {dec.ind_parts[i]};

        // Grow the chain one vertex at a time: the new vertex joins every
        // vertex outside the currently smallest ind-part, then a greedy pass
        // completes to P-maximality (single pass is sound: p hereditary, so
        // an addable edge stays addable backwards, never forwards).
        for (;;) {
            Graph H = rep.chain.back();
            JoinDecomposition dh = ind_parts(H);
            if (dh.ind_parts[0].order() >= u.max_order()) break;  // parts span the universe
            if (H.order() + 1 > Graph::kMaxOrder) {
                rep.partial = true;
                break;
            }
            int n = H.order();
            Rows rows{};
            for (int v = 0; v < n; ++v) rows[v] = H.row(v);
            rows[n] = H.full_mask() & ~dh.part_masks[0];
            for (int v = 0; v < n; ++v)
                if ((rows[n] >> v) & 1u) rows[v] |= 1u << n;
            if (!member(p, Graph::from_rows(n + 1, rows))) {
                rep.partial = true;
                break;
            }
            for (int a = 0; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    if ((rows[a] >> b) & 1u) continue;
                    rows[a] |= 1u << b;
                    rows[b] |= 1u << a;
                    if (!member(p, Graph::from_rows(n + 1, rows))) {
                        rows[a] &= ~(1u << b);
                        rows[b] &= ~(1u << a);
                    }
                }
            Graph Hn = Graph::from_rows(n + 1, rows);
            JoinDecomposition dn = ind_parts(Hn);
            if (dn.dc != d) {
                rep.partial = true;
                break;
            }
            // Lemma 6 alignment: match each factor's current part into a part
            // of the grown graph
            std::vector<std::vector<char>> ok(d, std::vector<char>(d, 0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    ok[i][j] = contains_induced(dn.ind_parts[j], rep.part_chains[i].back());
            std::vector<int> match = perfect_matching(ok);
            if (match.empty()) {
                rep.partial = true;
                break;
            }
            for (int i = 0; i < d; ++i) rep.part_chains[i].push_back(dn.ind_parts[match[i]]);
            rep.chain.push_back(Hn);
        }
        if (rep.chain.size() < 2) rep.partial = true;

        for (int i = 0; i < d; ++i)
            rep.factors.push_back(Property::generated_subgraph(rep.part_chains[i]));
    }

    for (const auto& f : rep.factors) rep.factor_views.push_back(materialize(*f, u));
    PropertyView prod = product_view(rep.factors, u);
    rep.product_equal = prod == pview;
    rep.first_difference = prod.first_difference(pview);
    if (rep.input_additive)
        for (const auto& f : rep.factors)
            rep.factor_additive.push_back(is_additive_up_to(*f, u).holds);
    return rep;
}

SuperadditiveVerdict check_dc_superadditive(const PropertyPtr& a, const PropertyPtr& b,
                                            const Universe& u) {
    if (!a->flags.hereditary || !b->flags.hereditary)
        throw Error("check_dc_superadditive: factors need hereditary certificates");
    SuperadditiveVerdict v;
    v.dc_a = dc_property(*a, u);
    v.dc_b = dc_property(*b, u);
    PropertyPtr prod = Property::product({a, b});
    v.dc_product = dc_property(*prod, u);
    v.consistent = v.dc_product >= v.dc_a + v.dc_b;
    return v;
}

}  // namespace gpw
