#include "gpw/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace gpw {

namespace {

using Rows = std::array<std::uint32_t, Graph::kMaxOrder>;

void check_rows(int n, const Rows& rows) {
    if (n < 0 || n > Graph::kMaxOrder)
        throw Error("graph order out of range: " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        if (rows[v] >> n) throw Error("adjacency row has bits beyond order");
        if ((rows[v] >> v) & 1u) throw Error("loop at vertex " + std::to_string(v));
        for (int u = v + 1; u < n; ++u)
            if (((rows[v] >> u) & 1u) != ((rows[u] >> v) & 1u))
                throw Error("adjacency not symmetric");
    }
    for (int v = n; v < Graph::kMaxOrder; ++v)
        if (rows[v]) throw Error("nonzero row beyond order");
}

// Iterated degree refinement. Returns a class index per vertex; classes are
// numbered in an isomorphism-invariant order (signatures sorted ascending).
std::vector<int> refine_classes(int n, const Rows& rows) {
    std::vector<int> cls(n, 0);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(cls[v]);
            for (int u = 0; u < n; ++u)
                if ((rows[v] >> u) & 1u) s.push_back(cls[u]);
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), v};
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int id = -1;
        const std::vector<int>* prev = nullptr;
        for (auto& [sig, v] : sorted) {
            if (!prev || sig != *prev) ++id;
            next[v] = id;
            prev = &sig;
        }
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

// Minimal-code search state. The code of a labelling is the sequence of
// "columns": column k holds the adjacency of position k to positions 0..k-1,
// packed with position 0 as the most significant bit, compared
// lexicographically. Lower codes put edges as late as possible.
struct CanonSearch {
    int n;
    const Rows* rows;
    std::vector<int> pos_class;   // which refinement class each position draws from
    std::vector<int> cls;         // class per original vertex
    std::vector<int> perm;        // perm[pos] = original vertex
    std::vector<std::uint32_t> cols;
    std::uint32_t placed = 0;
    std::vector<std::uint32_t> best;
    std::vector<int> best_perm;
    bool have_best = false;

    bool twins(int u, int v) const {
        std::uint32_t mu = (*rows)[u] & ~(1u << v);
        std::uint32_t mv = (*rows)[v] & ~(1u << u);
        return mu == mv;
    }

    void dfs(int pos) {
        if (pos == n) {
            if (!have_best || cols < best) {
                best = cols;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        struct Cand {
            std::uint32_t col;
            int v;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1u) continue;
            if (cls[v] != pos_class[pos]) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < pos; ++i)
                if (((*rows)[v] >> perm[i]) & 1u) col |= 1u << (pos - 1 - i);
            cands.push_back({col, v});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return std::tie(a.col, a.v) < std::tie(b.col, b.v); });
        std::vector<int> tried;
        for (auto& [col, v] : cands) {
            // best can change under a child, so compare the prefix fresh
            if (have_best && col > best[pos] &&
                std::equal(cols.begin(), cols.begin() + pos, best.begin()))
                break;  // sorted: the rest are worse
            bool dup = false;
            for (int u : tried)
                if (twins(u, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(v);
            perm[pos] = v;
            cols[pos] = col;
            placed |= 1u << v;
            dfs(pos + 1);
            placed &= ~(1u << v);
        }
    }
};

}  // namespace

Graph canonicalise(int n, const Rows& rows) {
    check_rows(n, rows);
    Graph g;
    g.n_ = static_cast<std::uint8_t>(n);
    if (n == 0) return g;

    int m = 0;
    for (int v = 0; v < n; ++v) m += std::popcount(rows[v]);
    m /= 2;
    if (m == 0 || m == n * (n - 1) / 2) {  // edgeless / complete: any labelling
        for (int v = 0; v < n; ++v) g.rows_[v] = rows[v];
        return g;
    }

    CanonSearch s;
    s.n = n;
    s.rows = &rows;
    s.cls = refine_classes(n, rows);
    // positions consume classes in class order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s.cls[a] < s.cls[b]; });
    s.pos_class.resize(n);
    for (int p = 0; p < n; ++p) s.pos_class[p] = s.cls[order[p]];
    s.perm.assign(n, -1);
    s.cols.assign(n, 0);
    s.dfs(0);

    // rebuild adjacency in the winning labelling
    std::vector<int> where(n);  // original vertex -> position
    for (int p = 0; p < n; ++p) where[s.best_perm[p]] = p;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if ((rows[v] >> u) & 1u) g.rows_[where[v]] |= 1u << where[u];
    return g;
}

Graph Graph::from_rows(int n, const Rows& rows) { return canonicalise(n, rows); }

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Rows rows{};
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw Error("bad edge");
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
    }
    return canonicalise(n, rows);
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += degree(v);
    return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t Graph::hash() const {
    std::size_t h = n_;
    for (int v = 0; v < n_; ++v) h = h * 1000003u ^ rows_[v];
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > Graph::kMaxOrder) throw Error("disjoint_union exceeds vertex cap");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    for (int v = 0; v < a.order(); ++v) rows[v] = a.row(v);
    for (int v = 0; v < b.order(); ++v) rows[a.order() + v] = b.row(v) << a.order();
    return canonicalise(n, rows);
}

Graph join(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > Graph::kMaxOrder) throw Error("join exceeds vertex cap");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    std::uint32_t amask = a.order() == 0 ? 0 : ((1u << a.order()) - 1u);
    std::uint32_t bmask = ((n == 32 ? ~0u : (1u << n) - 1u)) & ~amask;
    for (int v = 0; v < a.order(); ++v) rows[v] = a.row(v) | bmask;
    for (int v = 0; v < b.order(); ++v) rows[a.order() + v] = (b.row(v) << a.order()) | amask;
    return canonicalise(n, rows);
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    std::uint32_t full = g.full_mask();
    for (int v = 0; v < n; ++v) rows[v] = (~g.row(v) & full) & ~(1u << v);
    return canonicalise(n, rows);
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
    if (keep & ~g.full_mask()) throw Error("vertex mask out of range");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) verts.push_back(v);
    int n = static_cast<int>(verts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(verts[i], verts[j])) {
                rows[i] |= 1u << j;
                rows[j] |= 1u << i;
            }
    return canonicalise(n, rows);
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw Error("add_edge: loop requested");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw Error("add_edge: vertex out of range");
    if (g.adjacent(u, v)) throw Error("add_edge: edge already present");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    for (int w = 0; w < g.order(); ++w) rows[w] = g.row(w);
    rows[u] |= 1u << v;
    rows[v] |= 1u << u;
    return canonicalise(g.order(), rows);
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw Error("delete_edge: edge absent");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    for (int w = 0; w < g.order(); ++w) rows[w] = g.row(w);
    rows[u] &= ~(1u << v);
    rows[v] &= ~(1u << u);
    return canonicalise(g.order(), rows);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error("delete_vertex: out of range");
    return induced_subgraph(g, g.full_mask() & ~(1u << v));
}

namespace {

// Backtracking embedding of pattern into host. induced=true demands adjacency
// equality on mapped pairs, otherwise only pattern edges must map to edges.
bool embeds(const Graph& host, const Graph& pattern, bool induced) {
    int np = pattern.order(), nh = host.order();
    if (np > nh) return false;
    if (np == 0) return true;
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> map(np, -1);
    std::uint32_t used = 0;

    auto rec = [&](auto&& self, int k) -> bool {
        if (k == np) return true;
        int pv = order[k];
        for (int hv = 0; hv < nh; ++hv) {
            if ((used >> hv) & 1u) continue;
            if (!induced && host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int j = 0; j < k; ++j) {
                bool pe = pattern.adjacent(pv, order[j]);
                bool he = host.adjacent(hv, map[order[j]]);
                if (induced ? (pe != he) : (pe && !he)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[pv] = hv;
            used |= 1u << hv;
            if (self(self, k + 1)) return true;
            used &= ~(1u << hv);
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool contains_induced(const Graph& host, const Graph& pattern) {
    return embeds(host, pattern, true);
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.edge_count() > host.edge_count()) return false;
    return embeds(host, pattern, false);
}

bool contains_disjoint_induced(const Graph& host, const Graph& p1, const Graph& p2) {
    int n1 = p1.order(), n2 = p2.order();
    if (n1 + n2 > host.order()) return false;
    std::uint32_t full = host.full_mask();
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) != n1) continue;
        if (induced_subgraph(host, s) != p1) continue;
        if (contains_induced(induced_subgraph(host, full & ~s), p2)) return true;
    }
    return false;
}

std::vector<VertexMask> connected_components(const Graph& g) {
    std::vector<VertexMask> comps;
    std::uint32_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint32_t comp = 1u << v, frontier = 1u << v;
        while (frontier) {
            std::uint32_t next = 0;
            for (int u = 0; u < g.order(); ++u)
                if ((frontier >> u) & 1u) next |= g.row(u);
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return connected_components(g).size() == 1;
}

Graph empty_graph(int r) { return Graph::from_edges(r, {}); }

Graph complete_graph(int r) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) e.emplace_back(u, v);
    return Graph::from_edges(r, e);
}

Graph path_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < k; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(k, e);
}

Graph cycle_graph(int k) {
    if (k < 3) throw Error("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < k; ++v) e.emplace_back(v, (v + 1) % k);
    return Graph::from_edges(k, e);
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    std::vector<std::pair<int, int>> e;
    int astart = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int bstart = astart + parts[i];
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v) e.emplace_back(astart + u, bstart + v);
            bstart += parts[j];
        }
        astart += parts[i];
    }
    return Graph::from_edges(n, e);
}

}  // namespace gpw
