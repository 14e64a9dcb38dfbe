#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "ramsey/graph.hpp"

namespace ramsey {

// Plain edge list:    "n m" then m lines "u v"   with 0 <= u < v < n.
// Colored edge list:  "n m" then m lines "u v c" with c in {B, R}.
// Blank lines are ignored. Every error is a ParseError carrying the 1-based
// line number.
Graph parse_graph(std::istream& in);
ColoredGraph parse_colored_graph(std::istream& in);
// Accepts either format; the column count of the first edge line decides.
std::variant<Graph, ColoredGraph> parse_any_graph(std::istream& in);

void format_graph(std::ostream& out, const Graph& g);
void format_colored_graph(std::ostream& out, const ColoredGraph& cg);

Graph read_graph(const std::filesystem::path& path);
ColoredGraph read_colored_graph(const std::filesystem::path& path);
std::variant<Graph, ColoredGraph> read_any_graph(const std::filesystem::path& path);

void write_graph(const Graph& g, const std::filesystem::path& path);
void write_colored_graph(const ColoredGraph& cg, const std::filesystem::path& path);

}  // namespace ramsey
