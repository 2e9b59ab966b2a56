#include "orbigraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "orbigraph/error.hpp"

namespace orbigraph {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-empty lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      const std::size_t tok = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > tok) line.tokens.push_back({raw.substr(tok, pos - tok), tok + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

Weight to_integer(const Token& tok, std::size_t line) {
  Weight value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw OrbigraphError(ErrorKind::SyntaxError,
                         "line " + std::to_string(line) + ", column " + std::to_string(tok.column) +
                             ": expected an integer, got '" + std::string(tok.text) + "'",
                         {.column = tok.column, .line = line});
  return value;
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& what) {
  throw OrbigraphError(ErrorKind::SyntaxError,
                       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
                       {.column = column, .line = line});
}

}  // namespace

Orbigraph parse_orbigraph(std::string_view text, bool allow_disconnected) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw OrbigraphError(ErrorKind::SyntaxError, e.what());
    }
    return orbigraph_from_json(j, allow_disconnected);
  }

  const auto lines = tokenize(text);
  if (lines.empty()) throw OrbigraphError(ErrorKind::EmptyMatrix, "no header line");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) syntax_error(header.number, 1, "header must be 'n k'");
  const Weight n = to_integer(header.tokens[0], header.number);
  const Weight k = to_integer(header.tokens[1], header.number);
  if (n < 1) throw OrbigraphError(ErrorKind::EmptyMatrix, "vertex count must be positive", {.line = header.number});
  if (k < 1) syntax_error(header.number, header.tokens[1].column, "degree must be positive");
  const auto size = static_cast<std::size_t>(n);
  if (lines.size() < size + 1) {
    const std::size_t at = lines.back().number + 1;
    syntax_error(at, 1, "expected " + std::to_string(size) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  if (lines.size() > size + 1) syntax_error(lines[size + 1].number, 1, "unexpected content after the matrix");

  IntMatrix rows(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Line& line = lines[i + 1];
    if (line.tokens.size() != size)
      syntax_error(line.number, line.tokens.size() > size ? line.tokens[size].column : 1,
                   "expected " + std::to_string(size) + " entries, found " + std::to_string(line.tokens.size()));
    for (const auto& tok : line.tokens) rows[i].push_back(to_integer(tok, line.number));
  }

  try {
    return Orbigraph::validate(rows, k, allow_disconnected);
  } catch (const OrbigraphError& e) {
    ErrorLocation where = e.where();
    if (where.row) where.line = lines[*where.row + 1].number;
    const std::string prefix = where.line ? "line " + std::to_string(*where.line) + ": " : "";
    // Strip the "Kind: " prefix the original message already carries.
    std::string message = e.what();
    if (auto colon = message.find(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw OrbigraphError(e.kind(), prefix + message, where);
  }
}

std::string serialize_orbigraph(const Orbigraph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.degree() << '\n';
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = 0; j < g.size(); ++j) out << (j ? " " : "") << g(i, j);
    out << '\n';
  }
  return out.str();
}

nlohmann::json orbigraph_to_json(const Orbigraph& g) {
  return {{"n", g.size()}, {"k", g.degree()}, {"adjacency", g.rows()}};
}

Orbigraph orbigraph_from_json(const nlohmann::json& j, bool allow_disconnected) {
  if (!j.is_object() || !j.contains("adjacency"))
    throw OrbigraphError(ErrorKind::SyntaxError, "JSON orbigraph needs an \"adjacency\" array");
  IntMatrix rows;
  try {
    rows = j.at("adjacency").get<IntMatrix>();
  } catch (const nlohmann::json::exception& e) {
    throw OrbigraphError(ErrorKind::SyntaxError, std::string("adjacency: ") + e.what());
  }
  std::optional<Weight> k;
  if (j.contains("k")) {
    if (!j["k"].is_number_integer()) throw OrbigraphError(ErrorKind::SyntaxError, "\"k\" must be an integer");
    k = j["k"].get<Weight>();
  }
  return Orbigraph::validate(rows, k, allow_disconnected);
}

VertexPartition parse_partition(std::string_view text, std::size_t vertex_count) {
  std::vector<std::vector<Vertex>> cells;
  for (const auto& line : tokenize(text)) {
    std::vector<Vertex> cell;
    for (const auto& tok : line.tokens) {
      const Weight v = to_integer(tok, line.number);
      if (v < 0) syntax_error(line.number, tok.column, "vertex index must be nonnegative");
      cell.push_back(static_cast<Vertex>(v));
    }
    cells.push_back(std::move(cell));
  }
  return VertexPartition(vertex_count, std::move(cells));
}

std::string serialize_partition(const VertexPartition& p) {
  std::ostringstream out;
  for (const auto& cell : p.cells()) {
    for (std::size_t i = 0; i < cell.size(); ++i) out << (i ? " " : "") << cell[i];
    out << '\n';
  }
  return out.str();
}

std::string export_dot(const Orbigraph& g, const DotOptions& options) {
  const auto singular = singular_vertices(g);
  std::ostringstream out;
  out << "digraph orbigraph {\n";
  out << "  // n=" << g.size() << " k=" << g.degree() << "\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  " << v << " [label=\"" << v << "\"";
    if (options.highlight_singular && std::binary_search(singular.begin(), singular.end(), v))
      out << ", shape=doublecircle, style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = 0; j < g.size(); ++j) {
      const Weight w = g(i, j);
      if (w == 0) continue;
      out << "  " << i << " -> " << j;
      if (!(options.suppress_unit_labels && w == 1)) out << " [label=\"" << w << "\"]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace orbigraph
