#pragma once

#include <string>

#include "gpw/graph.hpp"

namespace gpw {

/// Header-less graph6 short form (valid for order <= 62; this library caps at
/// Graph::kMaxOrder). Encoding uses the graph's canonical labelling, so equal
/// graphs encode identically.
std::string to_graph6(const Graph& g);

/// Decodes a graph6 string; the result is canonicalised, so decode(encode(g))
/// == g always, while encode(decode(s)) may normalise a non-canonical s.
Graph from_graph6(const std::string& s);

}  // namespace gpw
