#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coedge/graph.hpp"

namespace coedge {

/// Malformed input text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// One graph6 record; surrounding whitespace and a ">>graph6<<" prefix
/// are accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "n m" followed by m pairs "u v", 0 <= u, v < n, u != v.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

/// Reads every graph in `text`: one graph6 record per nonempty line, or a
/// single edge list. Format is "graph6" or "edgelist".
std::vector<Graph> read_graphs(std::string_view text, const std::string& format);

}  // namespace coedge
