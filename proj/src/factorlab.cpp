#include "gpw/factorlab.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "gpw/graph6.hpp"

namespace gpw {

std::vector<Graph> min_graphs(const Property& p, const Universe& u) {
    std::vector<Graph> mem = materialize(p, u).members();
    std::vector<Graph> out;
    for (const Graph& g : mem) {
        bool minimal = true;
        for (const Graph& h : mem)
            if (h != g && contains_induced(g, h)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(g);
    }
    return out;
}

GeqFactorisationReport primitive_factorisation_geq(const Property& p, const Universe& u) {
    if (!is_geq_hereditary_up_to(p, u).holds)
        throw Error("primitive_factorisation_geq: p not >=-hereditary on the universe");
    GeqFactorisationReport rep;
    rep.mins = min_graphs(p, u);
    for (const Graph& g : rep.mins) {
        PropertyPtr f = Property::plus_g(g);
        rep.primitive.push_back(min_graphs(*f, u).size() == 1);
        rep.factors.push_back(std::move(f));
    }
    PropertyView prod = product_view(rep.factors, u);
    PropertyView pv = materialize(p, u);
    rep.product_equal = prod == pv;
    rep.first_difference = prod.first_difference(pv);
    return rep;
}

UnionProductVerdict union_is_product_geq(const Property& p,
                                         const std::vector<PropertyView>& cover,
                                         const Universe& u) {
    if (cover.empty()) throw Error("union_is_product_geq: empty cover");
    UnionProductVerdict v;
    v.cover_geq_hereditary = true;
    std::vector<PropertyPtr> parts;
    PropertyView un = cover[0];
    for (const PropertyView& c : cover) {
        PropertyPtr cp = Property::from_view(c);
        if (!is_geq_hereditary_up_to(*cp, u).holds) v.cover_geq_hereditary = false;
        parts.push_back(std::move(cp));
        un = un | c;
    }
    PropertyView pv = materialize(p, u);
    v.union_equal = un == pv;
    v.product_equal = product_view(parts, u) == pv;
    return v;
}

nlohmann::ordered_json UniquenessReport::to_json() const {
    nlohmann::ordered_json j;
    j["case"] = case_label;
    j["facts"] = nlohmann::ordered_json::array();
    for (const auto& f : facts) {
        nlohmann::ordered_json fj;
        fj["label"] = f.label;
        fj["graph"] = f.graph6;
        fj["expected"] = f.expected;
        fj["pass"] = f.pass;
        j["facts"].push_back(std::move(fj));
    }
    j["all_pass"] = all_pass;
    if (!alternative.empty()) {
        j["product_equal"] = product_equal;
        if (factor_difference) j["factor_difference"] = to_graph6(*factor_difference);
    }
    return j;
}

namespace {

void add_fact(UniquenessReport& rep, const std::string& label, const Graph& g,
              const std::string& expected, bool pass) {
    rep.facts.push_back({label, to_graph6(g), expected, pass});
}

void require_fits(const Graph& g, const Universe& u) {
    if (g.order() > u.max_order()) throw Error("theorem2 suite: witness exceeds the universe");
}

}  // namespace

UniquenessReport theorem2_witness_suite(int r, int s, const Universe& u) {
    UniquenessReport rep;
    if (r < 1 || s < 1) throw Error("theorem2_witness_suite: sizes must be positive");
    if (r == 1 || s == 1) {
        // O(1) o K(s) = K(1) o K(s) and O(r) o K(1) = O(r) o O(1): cases 2/3
        rep.case_label = "redirect-case-2-or-3";
        rep.all_pass = true;
        return rep;
    }
    rep.case_label = "O(" + std::to_string(r) + ")oK(" + std::to_string(s) + ")";
    PropertyPtr Or = Property::builtin("O", r);
    PropertyPtr Ks = Property::builtin("K", s);
    PropertyPtr O = Property::builtin("O");
    PropertyPtr K = Property::builtin("K");
    std::vector<PropertyPtr> P = {Or, Ks};

    // (i) no K_a u K_b with a,b >= 2 in P
    for (int a = 2; a + 2 <= u.max_order(); ++a)
        for (int b = a; a + b <= u.max_order(); ++b) {
            Graph g = disjoint_union(complete_graph(a), complete_graph(b));
            add_fact(rep, "w1:KaUKb", g, "not member", !product_membership(g, P));
        }
    // (ii) the two exclusion graphs
    {
        Graph g = complete_graph(s + 2);
        require_fits(g, u);
        add_fact(rep, "w2:K(s+2)", g, "not member", !product_membership(g, P));
        Graph h = join(empty_graph(r),
                       disjoint_union(complete_graph(s - 1), complete_graph(1)));
        require_fits(h, u);
        add_fact(rep, "w2:Kbar_r+(K(s-1)UK1)", h, "not member", !product_membership(h, P));
    }
    // (iii)+(iv) essentially two (O,K)-partitions, and membership in P
    for (int rp = 1; rp <= r; ++rp) {
        Graph g = join(empty_graph(rp), complete_graph(s));
        require_fits(g, u);
        auto parts = enumerate_partitions(g, {O, K}, PartitionMode::Essential);
        add_fact(rep, "w3:Kbar_r'+Ks", g, "two essential (O,K)-partitions", parts.size() == 2);
        add_fact(rep, "w4:Kbar_r'+Ks", g, "member", product_membership(g, P));
    }
    for (int sp = 1; sp <= s; ++sp) {
        Graph g = disjoint_union(empty_graph(r), complete_graph(sp));
        require_fits(g, u);
        auto parts = enumerate_partitions(g, {O, K}, PartitionMode::Essential);
        add_fact(rep, "w3:Kbar_rUKs'", g, "two essential (O,K)-partitions", parts.size() == 2);
        add_fact(rep, "w4:Kbar_rUKs'", g, "member", product_membership(g, P));
    }

    rep.all_pass = std::all_of(rep.facts.begin(), rep.facts.end(),
                               [](const WitnessFact& f) { return f.pass; });
    return rep;
}

UniquenessReport theorem2_oo_suite(int r, int s, const Universe& u) {
    if (r < 1 || s < 1) throw Error("theorem2_oo_suite: sizes must be positive");
    UniquenessReport rep;
    rep.case_label = "O(" + std::to_string(r) + ")oO(" + std::to_string(s) + ")";
    PropertyPtr O = Property::builtin("O");
    PropertyPtr K = Property::builtin("K");
    std::vector<PropertyPtr> P = {Property::builtin("O", r), Property::builtin("O", s)};
    std::vector<PropertyPtr> Pc = {Property::builtin("K", r), Property::builtin("K", s)};

    for (int rp = 1; rp <= r; ++rp)
        for (int sp = 1; sp <= s; ++sp) {
            Graph g = join(empty_graph(rp), empty_graph(sp));
            require_fits(g, u);
            add_fact(rep, "o1:member", g, "member", product_membership(g, P));
            auto parts = enumerate_partitions(g, {O, O}, PartitionMode::Essential);
            add_fact(rep, "o1:unique", g, "one essential (O,O)-partition", parts.size() == 1);
            // complement dual: K(r) o K(s)
            Graph gc = complement(g);
            add_fact(rep, "o4:dual-member", gc, "member", product_membership(gc, Pc));
            auto partsc = enumerate_partitions(gc, {K, K}, PartitionMode::Essential);
            add_fact(rep, "o4:dual-unique", gc, "one essential (K,K)-partition",
                     partsc.size() == 1);
        }
    // o2: both factors must contain every Kbar_r' with r' <= min(r, s)
    for (int rp = 1; rp <= std::min(r, s); ++rp) {
        Graph g = join(empty_graph(rp), empty_graph(rp));
        require_fits(g, u);
        add_fact(rep, "o2:Kbar_r'+Kbar_r'", g, "member", product_membership(g, P));
    }
    // o3: Kbar_r + Kbar_s' with r < s' <= s pins the larger side to one factor
    for (int sp = r + 1; sp <= s; ++sp) {
        Graph g = join(empty_graph(r), empty_graph(sp));
        require_fits(g, u);
        add_fact(rep, "o3:member", g, "member", product_membership(g, P));
        std::vector<PropertyPtr> smaller = {Property::builtin("O", r),
                                            Property::builtin("O", sp - 1)};
        add_fact(rep, "o3:needs-larger-factor", g, "not member of O(r)oO(s'-1)",
                 !product_membership(g, smaller));
    }

    rep.all_pass = std::all_of(rep.facts.begin(), rep.facts.end(),
                               [](const WitnessFact& f) { return f.pass; });
    return rep;
}

UniquenessReport nonuniqueness_witness(const PropertyPtr& p1, const PropertyPtr& p2,
                                       const Universe& u) {
    UniquenessReport rep;
    bool ih1 = is_induced_hereditary_up_to(*p1, u).holds;
    bool ih2 = is_induced_hereditary_up_to(*p2, u).holds;

    auto closure_of = [&](const PropertyPtr& p) {
        ClosureFlags f;
        f.induced_hereditary = true;
        return Property::from_view(induced_hereditary_closure(materialize(*p, u)), f);
    };
    Graph k1 = complete_graph(1), k2 = complete_graph(2), k2bar = empty_graph(2);

    if (!ih1 || !ih2) {  // branch (a): closures give a different factorisation
        rep.case_label = "branch-a-closure";
        rep.alternative = {closure_of(p1), closure_of(p2)};
    } else if (member(*p1, k2) && member(*p1, k2bar)) {  // branch (b), first factor
        rep.case_label = "branch-b-drop-K1";
        rep.alternative = {Property::without(p1, {k1}), p2};
    } else if (member(*p2, k2) && member(*p2, k2bar)) {
        rep.case_label = "branch-b-drop-K1";
        rep.alternative = {p1, Property::without(p2, {k1})};
    } else if (p1->kind == PropertyKind::Builtin && p1->builtin_name == "O" && p1->param == 0) {
        rep.case_label = "branch-c-drop-K1";  // P1 = O: drop K1 from P2
        rep.alternative = {p1, Property::without(p2, {k1})};
    } else if (p2->kind == PropertyKind::Builtin && p2->builtin_name == "K" && p2->param == 0) {
        rep.case_label = "branch-c-drop-K1";  // P2 = K: drop K1 from P1
        rep.alternative = {Property::without(p1, {k1}), p2};
    } else {
        throw Error("nonuniqueness_witness: no branch applies (uniqueness candidate)");
    }

    std::vector<PropertyPtr> orig = {p1, p2};
    for (std::size_t i = 0; i < 2 && !rep.factor_difference; ++i)
        rep.factor_difference =
            materialize(*orig[i], u).first_difference(materialize(*rep.alternative[i], u));
    // a Without factor can differ only on K1, which the view sees
    rep.product_equal = product_view(orig, u) == product_view(rep.alternative, u);
    rep.all_pass = rep.product_equal && rep.factor_difference.has_value();
    return rep;
}

IntersectionFamily intersection_representation(const Graph& g) {
    IntersectionFamily f;
    for (int v = 0; v < g.order(); ++v) {
        f.names.push_back("S" + std::to_string(v));
        std::set<std::string> s;
        for (int w = 0; w < g.order(); ++w)
            if (g.adjacent(v, w))
                s.insert("e" + std::to_string(std::min(v, w)) + "_" +
                         std::to_string(std::max(v, w)));
        f.sets.push_back(std::move(s));
    }
    return f;
}

Graph intersection_graph(const IntersectionFamily& f) {
    int n = static_cast<int>(f.sets.size());
    if (n > Graph::kMaxOrder) throw Error("intersection_graph: family too large");
    std::array<std::uint32_t, Graph::kMaxOrder> rows{};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool meet = std::any_of(f.sets[i].begin(), f.sets[i].end(), [&](const std::string& t) {
                return f.sets[j].count(t) != 0;
            });
            if (meet) {
                rows[i] |= 1u << j;
                rows[j] |= 1u << i;
            }
        }
    return Graph::from_rows(n, rows);
}

void write_family(std::ostream& os, const IntersectionFamily& f) {
    for (std::size_t i = 0; i < f.sets.size(); ++i) {
        os << f.names[i] << ':';
        for (const std::string& t : f.sets[i]) os << ' ' << t;
        os << '\n';
    }
}

IntersectionFamily read_family(std::istream& is) {
    IntersectionFamily f;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error("family: missing ':' in line: " + line);
        f.names.push_back(line.substr(0, colon));
        std::istringstream rest(line.substr(colon + 1));
        std::set<std::string> s;
        std::string tok;
        while (rest >> tok) s.insert(tok);
        f.sets.push_back(std::move(s));
    }
    return f;
}

}  // namespace gpw
