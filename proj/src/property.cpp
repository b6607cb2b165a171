#include "gpw/property.hpp"

#include <algorithm>
#include <bit>

#include "gpw/partition.hpp"

namespace gpw {

namespace {

// keep elements minimal under rel (used for forbidden sets)
std::vector<Graph> antichain_minimal(std::vector<Graph> set, bool induced,
                                     std::vector<Graph>* dropped) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<Graph> keep;
    for (const Graph& g : set) {
        bool dominated = false;
        for (const Graph& h : set)
            if (h != g && (induced ? contains_induced(g, h) : contains_subgraph(g, h))) {
                dominated = true;
                break;
            }
        if (dominated) {
            if (dropped) dropped->push_back(g);
        } else {
            keep.push_back(g);
        }
    }
    return keep;
}

// keep elements maximal under rel (used for generator sets)
std::vector<Graph> antichain_maximal(std::vector<Graph> set, bool induced,
                                     std::vector<Graph>* dropped) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<Graph> keep;
    for (const Graph& g : set) {
        bool dominated = false;
        for (const Graph& h : set)
            if (h != g && (induced ? contains_induced(h, g) : contains_subgraph(h, g))) {
                dominated = true;
                break;
            }
        if (dominated) {
            if (dropped) dropped->push_back(g);
        } else {
            keep.push_back(g);
        }
    }
    return keep;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

bool is_forest(const Graph& g) {
    return g.edge_count() == g.order() - static_cast<int>(connected_components(g).size());
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.order(); ++u) {
                if (!g.adjacent(v, u)) continue;
                if (colour[u] == -1) {
                    colour[u] = 1 - colour[v];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_split(const Graph& g) {
    std::uint32_t full = g.full_mask();
    for (std::uint32_t s = 0;; ++s) {
        std::uint32_t clique = full & ~s;
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            if ((s >> v) & 1u)
                ok = (g.row(v) & s) == 0;
            else
                ok = (g.row(v) & clique) == (clique & ~(1u << v));
        }
        if (ok) return true;
        if (s == full) return false;
    }
}

bool is_path_components(const Graph& g) {
    if (!is_forest(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_clique_with_pendants(const Graph& g) {
    std::uint32_t full = g.full_mask();
    for (std::uint32_t c = 0;; ++c) {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            if ((c >> v) & 1u) {
                if ((g.row(v) & c) != (c & ~(1u << v)))
                    ok = false;  // not a clique
                else
                    ok = std::popcount(g.row(v) & ~c) <= 1;  // at most one pendant
            } else {
                std::uint32_t nb = g.row(v);
                ok = nb == 0 || (std::popcount(nb) == 1 && (nb & c) == nb);
            }
        }
        if (ok) return true;
        if (c == full) return false;
    }
}

bool builtin_member(const Property& p, const Graph& g) {
    const std::string& b = p.builtin_name;
    if (b == "O") return g.edge_count() == 0 && (p.param == 0 || g.order() <= p.param);
    if (b == "K") return is_complete(g) && (p.param == 0 || g.order() <= p.param);
    if (b == "forests") return is_forest(g);
    if (b == "bipartite") return is_bipartite(g);
    if (b == "split") return is_split(g);
    if (b == "bounded_order") return g.order() <= p.param;
    if (b == "path_components") return is_path_components(g);
    if (b == "clique_with_pendants") return is_clique_with_pendants(g);
    throw Error("unknown builtin: " + b);
}

}  // namespace

PropertyPtr Property::builtin(const std::string& name, int param) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::Builtin;
    p->builtin_name = name;
    p->param = param;
    ClosureFlags& f = p->flags;
    if (name == "O") {
        f.induced_hereditary = f.hereditary = true;
        f.additive = param == 0;
    } else if (name == "K") {
        f.induced_hereditary = true;
        f.coadditive = param == 0;
    } else if (name == "forests" || name == "bipartite" || name == "path_components") {
        f.induced_hereditary = f.hereditary = f.additive = true;
    } else if (name == "split" || name == "clique_with_pendants") {
        f.induced_hereditary = true;
    } else if (name == "bounded_order") {
        if (param < 1) throw Error("bounded_order needs a positive parameter");
        f.induced_hereditary = f.hereditary = true;
    } else {
        throw Error("unknown builtin: " + name);
    }
    return p;
}

PropertyPtr Property::forbidden_induced(std::vector<Graph> set, std::vector<Graph>* dropped) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::ForbiddenInduced;
    p->graphs = antichain_minimal(std::move(set), true, dropped);
    p->flags.induced_hereditary = true;
    return p;
}

PropertyPtr Property::forbidden_subgraph(std::vector<Graph> set, std::vector<Graph>* dropped) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::ForbiddenSubgraph;
    p->graphs = antichain_minimal(std::move(set), false, dropped);
    p->flags.induced_hereditary = p->flags.hereditary = true;
    return p;
}

PropertyPtr Property::generated_induced(std::vector<Graph> set, std::vector<Graph>* dropped) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::GeneratedInduced;
    p->graphs = antichain_maximal(std::move(set), true, dropped);
    p->flags.induced_hereditary = true;
    return p;
}

PropertyPtr Property::generated_subgraph(std::vector<Graph> set, std::vector<Graph>* dropped) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::GeneratedSubgraph;
    p->graphs = antichain_maximal(std::move(set), false, dropped);
    p->flags.induced_hereditary = p->flags.hereditary = true;
    return p;
}

PropertyPtr Property::plus_g(const Graph& g) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::PlusG;
    p->graphs = {g};
    p->flags.geq_hereditary = true;
    p->flags.additive = true;
    return p;
}

PropertyPtr Property::minus_g(const Graph& g) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::MinusG;
    p->graphs = {g};
    p->flags.induced_hereditary = true;
    return p;
}

PropertyPtr Property::finite_set(std::vector<Graph> set) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::FiniteSet;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    p->graphs = std::move(set);
    return p;
}

PropertyPtr Property::product(std::vector<PropertyPtr> fs) {
    if (fs.empty()) throw Error("product needs at least one factor");
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::Product;
    p->flags.induced_hereditary = true;
    p->flags.hereditary = true;
    for (const auto& f : fs) {
        p->flags.induced_hereditary &= f->flags.induced_hereditary;
        p->flags.hereditary &= f->flags.hereditary;
    }
    p->factors = std::move(fs);
    return p;
}

PropertyPtr Property::union_of(std::vector<PropertyPtr> fs) {
    if (fs.empty()) throw Error("union needs at least one member");
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::UnionOf;
    p->flags.induced_hereditary = true;
    p->flags.hereditary = true;
    for (const auto& f : fs) {
        p->flags.induced_hereditary &= f->flags.induced_hereditary;
        p->flags.hereditary &= f->flags.hereditary;
    }
    p->factors = std::move(fs);
    return p;
}

PropertyPtr Property::intersection_of(std::vector<PropertyPtr> fs) {
    if (fs.empty()) throw Error("intersection needs at least one member");
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::IntersectionOf;
    p->flags.induced_hereditary = true;
    p->flags.hereditary = true;
    for (const auto& f : fs) {
        p->flags.induced_hereditary &= f->flags.induced_hereditary;
        p->flags.hereditary &= f->flags.hereditary;
    }
    p->factors = std::move(fs);
    return p;
}

PropertyPtr Property::without(PropertyPtr inner, std::vector<Graph> excluded) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::Without;
    p->factors = {std::move(inner)};
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    p->graphs = std::move(excluded);
    return p;
}

PropertyPtr Property::from_view(const PropertyView& v, ClosureFlags certified) {
    auto p = std::make_shared<Property>();
    p->kind = PropertyKind::View;
    p->view_universe = &v.universe();
    p->view_bits.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p->view_bits[i] = v.test(i) ? 1 : 0;
    p->flags = certified;
    return p;
}

MemberResult member_ex(const Property& p, const Graph& g) {
    if (g.is_null()) return {true, false};
    switch (p.kind) {
        case PropertyKind::Builtin:
            return {builtin_member(p, g), false};
        case PropertyKind::ForbiddenInduced:
            for (const Graph& f : p.graphs)
                if (contains_induced(g, f)) return {false, false};
            return {true, false};
        case PropertyKind::ForbiddenSubgraph:
            for (const Graph& f : p.graphs)
                if (contains_subgraph(g, f)) return {false, false};
            return {true, false};
        case PropertyKind::GeneratedInduced:
        case PropertyKind::GeneratedSubgraph: {
            bool induced = p.kind == PropertyKind::GeneratedInduced;
            int max_gen = 0;
            for (const Graph& s : p.graphs) {
                max_gen = std::max(max_gen, s.order());
                if (induced ? contains_induced(s, g) : contains_subgraph(s, g))
                    return {true, false};
            }
            return {false, g.order() > max_gen};
        }
        case PropertyKind::PlusG:
            return {contains_induced(g, p.graphs[0]), false};
        case PropertyKind::MinusG:
            return {!contains_induced(g, p.graphs[0]), false};
        case PropertyKind::FiniteSet:
            return {std::binary_search(p.graphs.begin(), p.graphs.end(), g), false};
        case PropertyKind::Product:
            return {product_membership(g, p.factors), false};
        case PropertyKind::UnionOf:
            for (const auto& f : p.factors)
                if (member(*f, g)) return {true, false};
            return {false, false};
        case PropertyKind::IntersectionOf:
            for (const auto& f : p.factors)
                if (!member(*f, g)) return {false, false};
            return {true, false};
        case PropertyKind::Without:
            if (std::binary_search(p.graphs.begin(), p.graphs.end(), g)) return {false, false};
            return member_ex(*p.factors[0], g);
        case PropertyKind::View: {
            auto i = p.view_universe->index_of(g);
            if (!i) {
                if (g.order() > p.view_universe->max_order()) return {false, true};
                throw Error("view property: graph not indexed");
            }
            return {p.view_bits[*i] != 0, false};
        }
    }
    throw Error("unreachable property kind");
}

bool member(const Property& p, const Graph& g) { return member_ex(p, g).value; }

PropertyView materialize(const Property& p, const Universe& u) {
    {
        std::lock_guard<std::mutex> lock(p.cache_mutex_);
        auto it = p.cache_.find(&u);
        if (it != p.cache_.end()) return *it->second;
    }
    PropertyView v(u);
    for (std::size_t i = 0; i < u.size(); ++i) v.set(i, member(p, u.graph(i)));
    {
        std::lock_guard<std::mutex> lock(p.cache_mutex_);
        p.cache_.emplace(&u, std::make_shared<const PropertyView>(v));
    }
    return v;
}

// ---- class checks ---------------------------------------------------------

ClassCheck is_induced_hereditary_up_to(const Property& p, const Universe& u) {
    PropertyView v = materialize(p, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!v.test(i)) continue;
        const Graph& g = u.graph(i);
        if (g.order() <= 1) continue;
        for (int w = 0; w < g.order(); ++w) {
            Graph h = delete_vertex(g, w);
            if (!v.contains(h)) return {false, std::make_pair(g, h)};
        }
    }
    return {true, std::nullopt};
}

ClassCheck is_hereditary_up_to(const Property& p, const Universe& u) {
    PropertyView v = materialize(p, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!v.test(i)) continue;
        const Graph& g = u.graph(i);
        if (g.order() > 1)
            for (int w = 0; w < g.order(); ++w) {
                Graph h = delete_vertex(g, w);
                if (!v.contains(h)) return {false, std::make_pair(g, h)};
            }
        for (auto [x, y] : g.edges()) {
            Graph h = delete_edge(g, x, y);
            if (!v.contains(h)) return {false, std::make_pair(g, h)};
        }
    }
    return {true, std::nullopt};
}

ClassCheck is_geq_hereditary_up_to(const Property& p, const Universe& u) {
    PropertyView v = materialize(p, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v.test(i)) continue;
        const Graph& g = u.graph(i);
        if (g.order() <= 1) continue;
        for (int w = 0; w < g.order(); ++w) {
            Graph h = delete_vertex(g, w);
            if (v.contains(h)) return {false, std::make_pair(h, g)};
        }
    }
    return {true, std::nullopt};
}

ClassCheck is_additive_up_to(const Property& p, const Universe& u) {
    PropertyView v = materialize(p, u);
    std::vector<Graph> mem = v.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i; j < mem.size(); ++j) {
            if (mem[i].order() + mem[j].order() > u.max_order()) continue;
            Graph un = disjoint_union(mem[i], mem[j]);
            if (!v.contains(un)) return {false, std::make_pair(mem[i], mem[j])};
        }
    return {true, std::nullopt};
}

ClassCheck is_coadditive_up_to(const Property& p, const Universe& u) {
    PropertyView v = materialize(p, u);
    std::vector<Graph> mem = v.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i; j < mem.size(); ++j) {
            if (mem[i].order() + mem[j].order() > u.max_order()) continue;
            Graph jn = join(mem[i], mem[j]);
            if (!v.contains(jn)) return {false, std::make_pair(mem[i], mem[j])};
        }
    return {true, std::nullopt};
}

namespace {

CompositiveCheck compositive_check(const Property& p, const Universe& u, bool disjoint) {
    PropertyView v = materialize(p, u);
    std::vector<Graph> mem = v.members();
    CompositiveCheck out;
    out.holds = true;
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i; j < mem.size(); ++j) {
            const Graph &g = mem[i], &h = mem[j];
            int bound = g.order() + h.order();
            int lo = disjoint ? bound : std::max(g.order(), h.order());
            bool found = false;
            for (const Graph& k : mem) {
                if (k.order() < lo) continue;
                bool ok = disjoint ? contains_disjoint_induced(k, g, h)
                                   : (contains_induced(k, g) && contains_induced(k, h));
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (found) continue;
            // For an induced-hereditary property a witness can always be shrunk
            // to order |g|+|h|, so absence within u is a definitive refutation.
            if (bound <= u.max_order()) {
                out.holds = false;
                if (!out.missing_pair) out.missing_pair = std::make_pair(g, h);
            } else {
                ++out.unverifiable_pairs;
            }
        }
    return out;
}

}  // namespace

CompositiveCheck is_compositive_up_to(const Property& p, const Universe& u) {
    return compositive_check(p, u, false);
}

CompositiveCheck is_indiscompositive_up_to(const Property& p, const Universe& u) {
    return compositive_check(p, u, true);
}

// ---- generating sets ------------------------------------------------------

std::vector<Graph> gen_filter_L(const std::vector<Graph>& gens, const Graph& L) {
    std::vector<Graph> out;
    for (const Graph& g : gens)
        if (contains_induced(g, L)) out.push_back(g);
    return out;
}

std::vector<Graph> gen_filter_2L(const std::vector<Graph>& gens, const Graph& L) {
    Graph two = disjoint_union(L, L);
    std::vector<Graph> out;
    for (const Graph& g : gens)
        if (contains_induced(g, two)) out.push_back(g);
    return out;
}

std::vector<Graph> two_star(const Graph& L) {
    int k = L.order();
    if (k > 4) throw Error("two_star: copy order above 4 not supported");
    if (2 * k > Graph::kMaxOrder) throw Error("two_star exceeds vertex cap");
    std::vector<Graph> out;
    std::uint64_t configs = 1ull << (k * k);
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    for (std::uint64_t c = 0; c < configs; ++c) {
        rows.fill(0);
        for (int v = 0; v < k; ++v) {
            rows[v] = L.row(v);
            rows[k + v] = L.row(v) << k;
        }
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                if ((c >> (x * k + y)) & 1ull) {
                    rows[x] |= 1u << (k + y);
                    rows[k + y] |= 1u << x;
                }
        out.push_back(canonicalise(2 * k, rows));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Graph> gen_filter_2star(const std::vector<Graph>& gens, const Graph& L) {
    std::vector<Graph> patterns = two_star(L);
    std::vector<Graph> out;
    for (const Graph& g : gens)
        for (const Graph& pat : patterns)
            if (contains_induced(g, pat)) {
                out.push_back(g);
                break;
            }
    return out;
}

GenSetCheck is_generating_set_up_to(const std::vector<Graph>& gens, const Property& p,
                                    const Universe& u) {
    GenSetCheck out;
    for (const Graph& g : gens)
        if (!member(p, g)) {
            out.generator_outside = g;
            break;
        }
    PropertyView v = materialize(p, u);
    for (const Graph& g : v.members()) {
        bool covered = false;
        for (const Graph& gen : gens)
            if (contains_induced(gen, g)) {
                covered = true;
                break;
            }
        if (!covered) {
            out.uncovered = g;
            break;
        }
    }
    out.ok = !out.uncovered && !out.generator_outside;
    return out;
}

ChainResult ordered_generating_chain(const Property& p, const Universe& u) {
    ChainResult res;
    res.compositivity = is_compositive_up_to(p, u);
    std::vector<Graph> mem = materialize(p, u).members();
    if (mem.empty()) return res;
    Graph head = mem[0];
    res.chain.push_back(head);
    for (std::size_t i = 1; i < mem.size(); ++i) {
        const Graph& g = mem[i];
        if (contains_induced(head, g)) continue;
        bool found = false;
        for (const Graph& k : mem)
            if (k.order() >= std::max(head.order(), g.order()) && contains_induced(k, head) &&
                contains_induced(k, g)) {
                head = k;
                res.chain.push_back(head);
                found = true;
                break;
            }
        if (!found) {
            res.stuck_at = g;
            return res;
        }
    }
    res.generates_all = true;
    return res;
}

Graph build_uniform(const Graph& g, const std::vector<std::pair<int, int>>& cross, int copies) {
    int k = g.order();
    if (copies < 1) throw Error("build_uniform: need at least one copy");
    if (copies * k > Graph::kMaxOrder) throw Error("build_uniform exceeds vertex cap");
    for (auto [x, y] : cross)
        if (x < 0 || y < 0 || x >= k || y >= k) throw Error("build_uniform: bad cross pair");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    auto at = [&](int copy, int v) { return copy * k + v; };
    for (int c = 0; c < copies; ++c)
        for (int v = 0; v < k; ++v)
            for (int u2 = 0; u2 < k; ++u2)
                if (g.adjacent(v, u2)) rows[at(c, v)] |= 1u << at(c, u2);
    for (int cp = 0; cp < copies; ++cp)
        for (int cq = cp + 1; cq < copies; ++cq)
            for (auto [x, y] : cross) {
                rows[at(cp, x)] |= 1u << at(cq, y);
                rows[at(cq, y)] |= 1u << at(cp, x);
            }
    // uniformity assertions: each copy induces g, and every ordered copy pair
    // induces the same labelled configuration as the first pair
    int n = copies * k;
    Graph whole = canonicalise(n, rows);
    for (int c = 0; c < copies; ++c) {
        std::uint32_t m = 0;
        for (int v = 0; v < k; ++v) m |= 1u << at(c, v);
        // rows are the labelled construction; check against it directly
        for (int v = 0; v < k; ++v)
            for (int u2 = 0; u2 < k; ++u2)
                if (g.adjacent(v, u2) != (((rows[at(c, v)] >> at(c, u2)) & 1u) != 0))
                    throw Error("build_uniform: copy does not induce the base graph");
    }
    for (int cp = 0; cp < copies; ++cp)
        for (int cq = cp + 1; cq < copies; ++cq)
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y)
                    if ((((rows[at(cp, x)] >> at(cq, y)) & 1u) != 0) !=
                        (((rows[at(0, x)] >> at(1, y)) & 1u) != 0))
                        throw Error("build_uniform: cross configuration not uniform");
    return whole;
}

}  // namespace gpw
