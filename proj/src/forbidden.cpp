#include "gpw/forbidden.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gpw/graph6.hpp"

namespace gpw {

namespace {

bool contains_proper(const Graph& host, const Graph& pattern, Relation rel) {
    if (host == pattern) return false;
    return rel == Relation::Induced ? contains_induced(host, pattern)
                                    : contains_subgraph(host, pattern);
}

std::vector<Graph> minimize(const std::vector<Graph>& set, Relation rel) {
    std::vector<Graph> out;
    for (const Graph& g : set) {
        bool dominated = false;
        for (const Graph& h : set)
            if (contains_proper(g, h, rel)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<Graph> ForbiddenSet::of_order(int n) const {
    std::vector<Graph> out;
    for (const Graph& g : graphs)
        if (g.order() == n) out.push_back(g);
    return out;
}

ForbiddenSet minimal_forbidden_induced(const Property& p, const Universe& u) {
    if (!p.flags.induced_hereditary)
        throw Error("minimal_forbidden_induced: property lacks an induced-hereditary certificate");
    ForbiddenSet fs;
    fs.relation = Relation::Induced;
    PropertyView v = materialize(p, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v.test(i)) continue;
        const Graph& g = u.graph(i);
        bool minimal = true;
        for (int w = 0; w < g.order() && minimal; ++w)
            minimal = v.contains(delete_vertex(g, w));
        if (minimal) fs.graphs.push_back(g);
    }
    return fs;
}

ForbiddenSet minimal_forbidden_subgraph(const Property& p, const Universe& u) {
    if (!p.flags.hereditary)
        throw Error("minimal_forbidden_subgraph: property lacks a hereditary certificate");
    ForbiddenSet fs;
    fs.relation = Relation::Subgraph;
    PropertyView v = materialize(p, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v.test(i)) continue;
        const Graph& g = u.graph(i);
        bool minimal = true;
        for (int w = 0; w < g.order() && minimal; ++w)
            minimal = v.contains(delete_vertex(g, w));
        for (auto [a, b] : g.edges()) {
            if (!minimal) break;
            minimal = v.contains(delete_edge(g, a, b));
        }
        if (minimal) fs.graphs.push_back(g);
    }
    return fs;
}

ForbiddenSet induced_to_subgraph(const ForbiddenSet& fle) {
    if (fle.relation != Relation::Induced)
        throw Error("induced_to_subgraph: input must carry the <= relation");
    if (auto v = is_antichain(fle.graphs, Relation::Induced); !v.ok)
        throw Error("induced_to_subgraph: input is not a <=-antichain");

    ForbiddenSet out;
    out.relation = Relation::Subgraph;
    out.graphs = minimize(fle.graphs, Relation::Subgraph);
    std::sort(out.graphs.begin(), out.graphs.end());

    // per-order refinement must agree with the global minimization
    std::map<int, std::vector<Graph>> by_order;
    for (const Graph& g : fle.graphs) by_order[g.order()].push_back(g);
    std::vector<Graph> per_order;
    for (auto& [n, set] : by_order) {
        auto m = minimize(set, Relation::Subgraph);
        per_order.insert(per_order.end(), m.begin(), m.end());
    }
    std::sort(per_order.begin(), per_order.end());
    if (per_order != out.graphs)
        throw Error("induced_to_subgraph: per-order refinement disagrees with global minimization");
    return out;
}

ForbiddenSet subgraph_to_induced(const ForbiddenSet& fsub, const Universe& u) {
    if (fsub.relation != Relation::Subgraph)
        throw Error("subgraph_to_induced: input must carry the ⊆ relation");
    std::set<Graph> supersets;
    for (const Graph& h : fsub.graphs) {
        if (h.order() > u.max_order()) continue;  // truncated away regardless
        auto non = h.non_edges();
        if (non.size() > 20) throw Error("subgraph_to_induced: complement too large");
        std::array<std::uint32_t, Graph::kMaxOrder> rows{};
        for (std::uint32_t s = 0; s < (1u << non.size()); ++s) {
            for (int v = 0; v < h.order(); ++v) rows[v] = h.row(v);
            for (std::size_t i = 0; i < non.size(); ++i)
                if ((s >> i) & 1u) {
                    rows[non[i].first] |= 1u << non[i].second;
                    rows[non[i].second] |= 1u << non[i].first;
                }
            supersets.insert(Graph::from_rows(h.order(), rows));
        }
    }
    ForbiddenSet out;
    out.relation = Relation::Induced;
    out.graphs = minimize({supersets.begin(), supersets.end()}, Relation::Induced);
    std::sort(out.graphs.begin(), out.graphs.end());
    return out;
}

AntichainVerdict is_antichain(const std::vector<Graph>& set, Relation rel) {
    for (const Graph& g : set)
        for (const Graph& h : set)
            if (contains_proper(g, h, rel)) return {false, std::make_pair(h, g)};
    return {true, std::nullopt};
}

Prop8Report check_prop8(const Property& p, const Universe& u) {
    ForbiddenSet fsub = minimal_forbidden_subgraph(p, u);
    ForbiddenSet fle = minimal_forbidden_induced(p, u);
    Prop8Report r;
    r.f_sub_count = fsub.graphs.size();
    r.f_le_count = fle.graphs.size();
    r.sets_equal = fsub.graphs == fle.graphs;
    r.f_le_sub_antichain = is_antichain(fle.graphs, Relation::Subgraph).ok;
    for (int n = 1; n <= u.max_order(); ++n) {
        auto slice = fle.of_order(n);
        if (!slice.empty())
            r.per_order_antichain.emplace_back(n, is_antichain(slice, Relation::Subgraph).ok);
    }
    r.consistent = r.sets_equal == r.f_le_sub_antichain;
    return r;
}

namespace {

// shared core of Propositions 2 and 3: every H+e contains a set member as an
// induced subgraph
std::pair<bool, std::optional<Graph>> plus_edge_criterion(const std::vector<Graph>& set) {
    for (const Graph& h : set)
        for (auto [a, b] : h.non_edges()) {
            Graph he = add_edge(h, a, b);
            bool hit = false;
            for (const Graph& g : set)
                if (contains_induced(he, g)) {
                    hit = true;
                    break;
                }
            if (!hit) return {false, h};
        }
    return {true, std::nullopt};
}

}  // namespace

Prop9Verdict check_prop9(const ForbiddenSet& fsub, const Universe& u) {
    if (fsub.relation != Relation::Subgraph)
        throw Error("check_prop9: input must carry the ⊆ relation");
    Prop9Verdict v;
    std::tie(v.criterion, v.witness) = plus_edge_criterion(fsub.graphs);
    PropertyPtr p = Property::forbidden_subgraph(fsub.graphs);
    v.sets_equal =
        minimal_forbidden_induced(*p, u).graphs == minimal_forbidden_subgraph(*p, u).graphs;
    v.consistent = v.criterion == v.sets_equal;
    return v;
}

Prop10Verdict check_prop10(const ForbiddenSet& fle, const Universe& u) {
    if (fle.relation != Relation::Induced)
        throw Error("check_prop10: input must carry the <= relation");
    Prop10Verdict v;
    std::tie(v.criterion, v.witness) = plus_edge_criterion(fle.graphs);
    PropertyPtr p = Property::forbidden_induced(fle.graphs);
    v.hereditary = is_hereditary_up_to(*p, u).holds;
    v.consistent = v.criterion == v.hereditary;
    return v;
}

AdditivityVerdict check_additivity_connectedness(const Property& p, const Universe& u) {
    ForbiddenSet fs = p.flags.hereditary ? minimal_forbidden_subgraph(p, u)
                                         : minimal_forbidden_induced(p, u);
    AdditivityVerdict v;
    v.all_connected = true;
    for (const Graph& g : fs.graphs)
        if (!is_connected(g)) {
            v.all_connected = false;
            v.disconnected_witness = g;
            break;
        }
    v.additive = is_additive_up_to(p, u).holds;
    v.consistent = v.all_connected == v.additive;
    return v;
}

void write_forbidden(std::ostream& os, const ForbiddenSet& fs) {
    os << "relation " << (fs.relation == Relation::Induced ? "induced" : "subgraph") << '\n';
    for (const Graph& g : fs.graphs) os << to_graph6(g) << '\n';
}

ForbiddenSet read_forbidden(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw Error("forbidden set: empty input");
    std::istringstream hdr(line);
    std::string kw, rel;
    hdr >> kw >> rel;
    if (kw != "relation" || (rel != "induced" && rel != "subgraph"))
        throw Error("forbidden set: bad header: " + line);
    ForbiddenSet fs;
    fs.relation = rel == "induced" ? Relation::Induced : Relation::Subgraph;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        fs.graphs.push_back(from_graph6(line));
    }
    std::sort(fs.graphs.begin(), fs.graphs.end());
    return fs;
}

}  // namespace gpw
