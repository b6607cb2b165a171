// Brute-force oracles used to cross-check the library. Deliberately naive:
// correctness over speed, no shared code with the implementations under test.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "gpw/graph.hpp"
#include "gpw/property.hpp"

namespace oracle {

// Minimum adjacency bit-string over all n! labellings. Usable up to n ~ 8.
inline std::vector<std::vector<int>> canon_matrix(const gpw::Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code.push_back(g.adjacent(perm[i], perm[j]) ? 1 : 0);
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = best[k++];
    return m;
}

inline bool isomorphic(const gpw::Graph& a, const gpw::Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canon_matrix(a) == canon_matrix(b);
}

// All graphs of order n up to isomorphism, by filtering all 2^(n(n-1)/2)
// labelled graphs through canon_matrix. Feasible for n <= 6.
inline std::vector<gpw::Graph> all_graphs(int n) {
    int m = n * (n - 1) / 2;
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<gpw::Graph> out;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if ((bits >> k) & 1u) edges.emplace_back(i, j);
        gpw::Graph g = gpw::Graph::from_edges(n, edges);
        if (seen.insert(canon_matrix(g)).second) out.push_back(g);
    }
    return out;
}

// Exhaustive (P1,...,Pk)-partition check: try all k^n assignments.
inline bool partition_exists(const gpw::Graph& g, const std::vector<gpw::PropertyPtr>& ps) {
    int n = g.order(), k = static_cast<int>(ps.size());
    std::vector<int> colour(n, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    for (std::uint64_t a = 0; a < total; ++a) {
        std::uint64_t x = a;
        for (int i = 0; i < n; ++i) {
            colour[i] = static_cast<int>(x % k);
            x /= k;
        }
        bool ok = true;
        for (int c = 0; c < k && ok; ++c) {
            gpw::VertexMask m = 0;
            for (int i = 0; i < n; ++i)
                if (colour[i] == c) m |= 1u << i;
            ok = member(*ps[c], induced_subgraph(g, m));
        }
        if (ok) return true;
    }
    return n == 0;  // null graph: the empty assignment works
}

// Two-colour BFS bipartiteness, written independently of the library builtin.
inline bool bipartite(const gpw::Graph& g) {
    int n = g.order();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(v, w)) continue;
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace oracle
