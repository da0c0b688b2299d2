#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

/// Syntax error in the line-oriented graph format.
class ParseError : public GraphError {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Format:
//   cg <d> <n>
//   # comment
//   e <u> <v> <color>
// Parity is not stored; it is derived per component with the lowest vertex
// white.

/// Throws ParseError on syntax errors and ValidationError on invalid graphs.
ColoredGraph parse_graph(std::string_view text);
ColoredGraph parse_graph(std::istream& in);

/// Edge lines ordered by (color, min endpoint, max endpoint, edge id).
std::string serialize_graph(const ColoredGraph& g);

ColoredGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace cgraph
