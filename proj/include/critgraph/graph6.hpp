#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Raised for malformed graph6 text; offset() is the byte index of the
/// first offending character in the input as given (header included).
class Graph6Error : public GraphError {
public:
    Graph6Error(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses one graph6 line. A leading ">>graph6<<" header and a single
/// trailing newline are accepted.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// One non-empty input line: either a parsed graph or the parse error.
struct Graph6Line {
    std::size_t line_number = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

/// Reads every non-blank line of a graph6 stream. Parse failures are
/// recorded per line instead of thrown.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

} // namespace critgraph
