#pragma once

#include <iosfwd>
#include <map>

#include "gpw/property.hpp"

namespace gpw {

/// Property definition file: one definition per line,
///   <name> <kind> <args...>
/// with graph6 literals for graph sets and earlier names for compound kinds.
/// Lines starting with '#' and blank lines are ignored. Written files
/// round-trip token-for-token.
struct PropertyFile {
    struct Entry {
        std::string name;
        std::string kind;
        std::vector<std::string> args;
    };
    std::vector<Entry> entries;
    std::map<std::string, PropertyPtr> properties;

    const PropertyPtr& get(const std::string& name) const;
};

PropertyFile parse_properties(std::istream& is);
void write_properties(std::ostream& os, const PropertyFile& f);

/// Builtin property token: a builtin name, optionally with a parameter, e.g.
/// "O", "O(2)", "bounded_order(3)", "bipartite". Also accepts "3-colourable"
/// as a product of three O factors. Returns nullptr for unknown tokens.
PropertyPtr parse_builtin_token(const std::string& token);

}  // namespace gpw
