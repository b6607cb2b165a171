#include "gpw/propfile.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "gpw/graph6.hpp"

namespace gpw {

const PropertyPtr& PropertyFile::get(const std::string& name) const {
    auto it = properties.find(name);
    if (it == properties.end()) throw Error("unknown property: " + name);
    return it->second;
}

PropertyPtr parse_builtin_token(const std::string& token) {
    if (token == "3-colourable")
        return Property::product({Property::builtin("O"), Property::builtin("O"),
                                  Property::builtin("O")});
    std::string name = token;
    int param = 0;
    if (auto open = token.find('('); open != std::string::npos) {
        if (token.back() != ')') return nullptr;
        name = token.substr(0, open);
        std::string num = token.substr(open + 1, token.size() - open - 2);
        try {
            param = std::stoi(num);
        } catch (const std::exception&) {
            return nullptr;
        }
    }
    static const char* names[] = {"O",     "K",           "forests",
                                  "bipartite", "split",   "bounded_order",
                                  "path_components",      "clique_with_pendants"};
    for (const char* b : names)
        if (name == b) return Property::builtin(name, param);
    return nullptr;
}

PropertyFile parse_properties(std::istream& is) {
    PropertyFile f;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        PropertyFile::Entry e;
        ss >> e.name >> e.kind;
        std::string tok;
        while (ss >> tok) e.args.push_back(tok);
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (e.name.empty() || e.kind.empty()) throw Error("malformed definition" + where());
        if (f.properties.count(e.name)) throw Error("duplicate property: " + e.name + where());

        auto graphs = [&](std::size_t from = 0) {
            std::vector<Graph> gs;
            for (std::size_t i = from; i < e.args.size(); ++i) gs.push_back(from_graph6(e.args[i]));
            return gs;
        };
        auto refs = [&](std::size_t from = 0) {
            std::vector<PropertyPtr> ps;
            for (std::size_t i = from; i < e.args.size(); ++i) {
                auto it = f.properties.find(e.args[i]);
                if (it == f.properties.end())
                    throw Error("unknown property reference: " + e.args[i] + where());
                ps.push_back(it->second);
            }
            return ps;
        };
        auto one_graph = [&] {
            if (e.args.size() != 1) throw Error(e.kind + " takes one graph" + where());
            return from_graph6(e.args[0]);
        };

        PropertyPtr p;
        if (e.kind == "builtin") {
            if (e.args.empty()) throw Error("builtin needs a name" + where());
            p = Property::builtin(e.args[0], e.args.size() > 1 ? std::stoi(e.args[1]) : 0);
        } else if (e.kind == "forbidden_induced") {
            p = Property::forbidden_induced(graphs());
        } else if (e.kind == "forbidden_subgraph") {
            p = Property::forbidden_subgraph(graphs());
        } else if (e.kind == "generated_induced") {
            p = Property::generated_induced(graphs());
        } else if (e.kind == "generated_subgraph") {
            p = Property::generated_subgraph(graphs());
        } else if (e.kind == "plus_g") {
            p = Property::plus_g(one_graph());
        } else if (e.kind == "minus_g") {
            p = Property::minus_g(one_graph());
        } else if (e.kind == "finite_set") {
            p = Property::finite_set(graphs());
        } else if (e.kind == "product") {
            p = Property::product(refs());
        } else if (e.kind == "union_of") {
            p = Property::union_of(refs());
        } else if (e.kind == "intersection_of") {
            p = Property::intersection_of(refs());
        } else if (e.kind == "without") {
            if (e.args.empty()) throw Error("without needs a base property" + where());
            auto it = f.properties.find(e.args[0]);
            if (it == f.properties.end())
                throw Error("unknown property reference: " + e.args[0] + where());
            p = Property::without(it->second, graphs(1));
        } else {
            throw Error("unknown kind: " + e.kind + where());
        }
        f.properties.emplace(e.name, std::move(p));
        f.entries.push_back(std::move(e));
    }
    return f;
}

void write_properties(std::ostream& os, const PropertyFile& f) {
    for (const auto& e : f.entries) {
        os << e.name << ' ' << e.kind;
        for (const auto& a : e.args) os << ' ' << a;
        os << '\n';
    }
}

}  // namespace gpw
