#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "socle/complex.hpp"
#include "socle/errors.hpp"
#include "socle/graph.hpp"
#include "socle/ideal.hpp"
#include "socle/monomial.hpp"
#include "socle/socle_engine.hpp"

// Documents exchanged with the command-line tool.
//
// Ideal (JSON):    {"n": 3, "generators": [[1,1,0],[1,0,1],[0,1,1]]}
// Graph (text):    first line n, then one "u v" edge per line, 1-based
// Facets (text):   first line n, then one facet per line as 1-based vertices
//
// Blank lines and lines starting with '#' are ignored in the text formats.

namespace socle::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

inline Json exponent_rows(std::span<const Monomial> monomials) {
  Json rows = Json::array();
  for (const Monomial& m : monomials) rows.push_back(Json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end())));
  return rows;
}

}  // namespace detail

inline Json to_json(const Monomial& m) {
  return Json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
}

inline Json to_json(const MonomialIdeal& ideal) {
  Json j;
  j["n"] = ideal.n();
  j["generators"] = detail::exponent_rows(ideal.generators());
  return j;
}

inline std::string serialize(const MonomialIdeal& ideal) { return to_json(ideal).dump(); }

inline MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError(0, "ideal document must be an object");
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError(0, "field 'n' must be a positive integer");
  const auto n = j["n"].get<std::uint64_t>();
  if (n == 0) throw ParseError(0, "field 'n' must be a positive integer");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError(0, "field 'generators' must be a list of exponent lists");
  std::vector<Monomial> gens;
  for (const Json& row : j["generators"]) {
    if (!row.is_array() || row.size() != n)
      throw ParseError(0, "every generator must be a list of " + std::to_string(n) + " exponents");
    std::vector<Exponent> e;
    for (const Json& a : row) {
      if (!a.is_number_unsigned() || a.get<std::uint64_t>() > std::numeric_limits<Exponent>::max())
        throw ParseError(0, "exponents must be nonnegative integers");
      e.push_back(a.get<Exponent>());
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Inverse of serialize. Accepts non-minimal generator lists and returns the
/// canonical ideal.
inline MonomialIdeal parse_ideal(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(detail::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  return ideal_from_json(j);
}

inline Json to_json(const SocleReport& report) {
  Json j;
  j["n"] = report.n;
  j["k"] = report.k ? Json(*report.k) : Json(nullptr);
  j["socle"] = detail::exponent_rows(report.socle);
  j["depth_zero"] = report.depth_zero;
  j["has_maximal_socle"] = report.has_maximal_socle;
  return j;
}

inline Json to_json(const VertexSet& s) {
  Json j = Json::array();
  for (Vertex v : s) j.push_back(v + 1);
  return j;
}

inline Json to_json(const FacetTuple& t) {
  Json j = Json::array();
  for (const VertexSet& f : t) j.push_back(to_json(f));
  return j;
}

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.push_back({number, text});
  }
  return lines;
}

inline std::vector<std::uint64_t> integers(const Line& line) {
  std::istringstream in(line.text);
  std::vector<std::uint64_t> values;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18)
      throw ParseError(line.number, "expected a nonnegative integer, got '" + token + "'");
    values.push_back(std::stoull(token));
  }
  return values;
}

inline std::size_t read_vertex_count(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty document: expected the vertex count");
  auto header = integers(lines.front());
  if (header.size() != 1 || header[0] == 0)
    throw ParseError(lines.front().number, "first line must be a single positive vertex count");
  return header[0];
}

inline Vertex to_vertex(std::uint64_t label, std::size_t n, std::size_t line) {
  if (label < 1 || label > n)
    throw ParseError(line, "vertex " + std::to_string(label) + " outside 1.." + std::to_string(n));
  return static_cast<Vertex>(label - 1);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  auto lines = detail::content_lines(in);
  const std::size_t n = detail::read_vertex_count(lines);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto values = detail::integers(lines[i]);
    if (values.size() != 2) throw ParseError(lines[i].number, "expected an edge 'u v'");
    Vertex u = detail::to_vertex(values[0], n, lines[i].number);
    Vertex v = detail::to_vertex(values[1], n, lines[i].number);
    if (u == v) throw ParseError(lines[i].number, "loops are not allowed");
    auto e = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(), Edge{e.first, e.second}) != edges.end())
      throw ParseError(lines[i].number, "duplicate edge");
    edges.emplace_back(e.first, e.second);
  }
  return Graph(n, std::move(edges));
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline SimplicialComplex parse_facets(std::istream& in) {
  auto lines = detail::content_lines(in);
  const std::size_t n = detail::read_vertex_count(lines);
  std::vector<VertexSet> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    VertexSet f;
    for (std::uint64_t label : detail::integers(lines[i]))
      f.push_back(detail::to_vertex(label, n, lines[i].number));
    if (f.empty()) throw ParseError(lines[i].number, "empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ParseError(lines[i].number, "repeated vertex in a facet");
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (is_subset(facets[j], f) || is_subset(f, facets[j]))
        throw ParseError(lines[i].number, "facet is comparable with an earlier facet");
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(n, std::move(facets));
}

inline SimplicialComplex parse_facets(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_facets(in);
}

inline std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline std::string format_facets(const SimplicialComplex& c) {
  std::string out = std::to_string(c.n()) + "\n";
  for (const VertexSet& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + std::to_string(f[i] + 1);
    out += "\n";
  }
  return out;
}

}  // namespace socle::io
