#include "gpw/graph6.hpp"

#include <array>

namespace gpw {

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v)) cur |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(63 + cur));
                bit = 5;
                cur = 0;
            }
        }
    if (n >= 2 && bit != 5) out.push_back(static_cast<char>(63 + cur));
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw Error("graph6: empty string");
    int n = s[0] - 63;
    if (n < 0 || n > Graph::kMaxOrder)
        throw Error("graph6: order out of supported range: " + s);
    std::size_t need = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != need) throw Error("graph6: bad length: " + s);
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    std::size_t idx = 1;
    int bit = 5;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            int c = s[idx] - 63;
            if (c < 0 || c > 63) throw Error("graph6: bad character: " + s);
            if ((c >> bit) & 1) {
                rows[u] |= 1u << v;
                rows[v] |= 1u << u;
            }
            if (--bit < 0) {
                bit = 5;
                ++idx;
            }
        }
    return Graph::from_rows(n, rows);
}

}  // namespace gpw
