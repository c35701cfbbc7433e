#pragma once

#include "kemeny/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace kemeny {

// Edge-list format:
//   line 1:      "n m"
//   next m lines: "u v"  (0-based, single space)
// Anything after '#' on a line is a comment; blank lines are ignored.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
Graph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace kemeny
