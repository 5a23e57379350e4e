#pragma once

#include "ctxgraph/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace ctxgraph {

/// Resolves a textual graph descriptor:
///
///   spec := "cycle:" INT | "anticycle:" INT | "circulant:" INT ":" INT ("," INT)*
///         | "johnson:" INT ":" INT | "shrikhande" | "complete:" INT
///         | "complement(" spec ")" | "product(" spec "," spec ")"
///         | "power(" spec "," INT ")" | "file:" PATH
///
/// PATH runs up to the next ',' or ')' (or the end of input). Malformed input
/// raises InvalidInput; out-of-range parameters raise InvalidParameter.
Graph parse_graph_spec(std::string_view spec, std::size_t product_cap = default_product_cap);

/// Edge-list format: first non-comment line is the vertex count, then one
/// "u v" line per edge with 0 <= u < v < n. Lines starting with '#' are
/// comments. Duplicate edges are rejected.
Graph read_edge_list(std::istream &in, std::string label = {});
Graph load_edge_list(const std::string &path);
void write_edge_list(std::ostream &out, const Graph &g);

} // namespace ctxgraph
