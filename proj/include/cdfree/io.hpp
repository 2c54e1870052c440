#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

// Edge-list graph files:
//
//   # comment
//   p <n> <m>
//   <u> <v>        (m lines, 0 <= u, v < n, u != v)
//
// Blank lines and lines starting with '#' are ignored anywhere.
namespace cdfree {

class parse_error : public input_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

} // namespace detail

inline graph parse_graph(std::string_view text) {
  std::optional<graph> g;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#')
      continue;
    last_line = line_no;
    if (!g) {
      if (toks.size() != 3 || toks[0] != "p")
        throw parse_error(line_no, "expected header 'p <n> <m>'");
      const std::size_t n = detail::parse_count(toks[1], line_no);
      expected = detail::parse_count(toks[2], line_no);
      if (n > std::size_t(vertex_id(-1)) / 2)
        throw parse_error(line_no, "vertex count too large");
      if (n < 2 ? expected > 0 : expected > n * (n - 1) / 2)
        throw parse_error(line_no, "more edges than vertex pairs");
      g.emplace(n);
      continue;
    }
    if (toks.size() != 2)
      throw parse_error(line_no, "expected '<u> <v>'");
    const std::size_t u = detail::parse_count(toks[0], line_no);
    const std::size_t v = detail::parse_count(toks[1], line_no);
    if (u >= g->vertex_count() || v >= g->vertex_count())
      throw parse_error(line_no, "vertex id out of range");
    if (u == v)
      throw parse_error(line_no, "loop at vertex " + std::to_string(u));
    if (g->edge_count() == expected)
      throw parse_error(line_no, "more edge lines than the header declares");
    if (g->has_edge(vertex_id(u), vertex_id(v)))
      throw parse_error(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g->add_edge(vertex_id(u), vertex_id(v));
  }
  if (!g)
    throw parse_error(line_no, "missing header 'p <n> <m>'");
  if (g->edge_count() != expected)
    throw parse_error(last_line, "header declares " + std::to_string(expected) + " edges, found " +
                                     std::to_string(g->edge_count()));
  return std::move(*g);
}

// Canonical form: header, then edges ascending with u < v.
inline std::string write_graph(const graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const edge& e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

} // namespace cdfree
