#include "cgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

namespace cgraph {

ParseError::ParseError(int line, int column, const std::string& what)
    : GraphError("line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int to_int(const Token& tok, int line_no) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0 || tok.text[0] == '+') {
    throw ParseError(line_no, tok.column,
                     "expected a nonnegative integer, got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  RawGraph raw;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].text.front() == '#') {
      if (!have_header) throw ParseError(line_no, 1, "comment before header");
      continue;
    }
    if (!have_header) {
      if (toks[0].text != "cg") {
        throw ParseError(line_no, toks[0].column, "expected header 'cg <d> <n>'");
      }
      if (toks.size() != 3) {
        throw ParseError(line_no, toks.size() > 3 ? toks[3].column : 1,
                         "header takes exactly two integers");
      }
      raw.dimension = to_int(toks[1], line_no);
      raw.vertex_count = to_int(toks[2], line_no);
      have_header = true;
      continue;
    }
    if (toks[0].text != "e") {
      throw ParseError(line_no, toks[0].column,
                       "unknown record '" + std::string(toks[0].text) + "'");
    }
    if (toks.size() != 4) {
      throw ParseError(line_no, toks.size() > 4 ? toks[4].column : 1,
                       "edge record takes exactly three integers");
    }
    raw.edges.push_back({to_int(toks[1], line_no), to_int(toks[2], line_no),
                         to_int(toks[3], line_no)});
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing header");
  return ColoredGraph::from_raw(std::move(raw));
}

ColoredGraph parse_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_graph(std::string_view(text));
}

std::string serialize_graph(const ColoredGraph& g) {
  std::ostringstream os;
  os << "cg " << g.dimension() << ' ' << g.vertex_count() << '\n';
  for (const Edge& e : g.sorted_edges()) {
    os << "e " << e.u << ' ' << e.v << ' ' << e.color << '\n';
  }
  return os.str();
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path.string());
  return parse_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path.string());
  out << serialize_graph(g);
}

}  // namespace cgraph
