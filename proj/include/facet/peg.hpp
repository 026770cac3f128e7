#pragma once

// PEG text format:
//
//   peg 1
//   vertices <n>
//   edges <m>
//   e <id> <u> <v>          one line per edge
//   rot <v> <dart>*         one line per vertex, darts clockwise
//
// '#' starts a comment that runs to the end of the line.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "facet/embedding.hpp"

namespace facet {

struct ParsedGraph {
  EmbeddedGraph graph;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline long long parse_int(const std::string& s, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + s + "'");
  return v;
}

}  // namespace detail

inline ParsedGraph parse_peg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<bool> edge_seen;
  std::vector<std::vector<Dart>> rotation;
  std::vector<bool> rot_seen;

  auto fail = [&](const std::string& msg) -> InputError {
    return InputError("line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::tokens_of(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (!header) {
      if (key != "peg" || tok.size() != 2 || tok[1] != "1") throw fail("expected header 'peg 1'");
      header = true;
      continue;
    }
    if (key == "vertices") {
      if (tok.size() != 2 || n >= 0) throw fail("bad or repeated 'vertices' line");
      n = detail::parse_int(tok[1], line_no);
      if (n < 0) throw fail("negative vertex count");
      rotation.assign(static_cast<std::size_t>(n), {});
      rot_seen.assign(static_cast<std::size_t>(n), false);
    } else if (key == "edges") {
      if (tok.size() != 2 || m >= 0) throw fail("bad or repeated 'edges' line");
      m = detail::parse_int(tok[1], line_no);
      if (m < 0) throw fail("negative edge count");
      endpoints.assign(static_cast<std::size_t>(m), {-1, -1});
      edge_seen.assign(static_cast<std::size_t>(m), false);
    } else if (key == "e") {
      if (n < 0 || m < 0) throw fail("'e' before 'vertices' and 'edges'");
      if (tok.size() != 4) throw fail("expected 'e <id> <u> <v>'");
      long long id = detail::parse_int(tok[1], line_no);
      long long u = detail::parse_int(tok[2], line_no);
      long long v = detail::parse_int(tok[3], line_no);
      if (id < 0 || id >= m) throw fail("edge id " + tok[1] + " out of range");
      if (u < 0 || u >= n || v < 0 || v >= n) throw fail("edge endpoint out of range");
      if (edge_seen[static_cast<std::size_t>(id)]) throw fail("edge " + tok[1] + " defined twice");
      edge_seen[static_cast<std::size_t>(id)] = true;
      endpoints[static_cast<std::size_t>(id)] = {static_cast<int>(u), static_cast<int>(v)};
    } else if (key == "rot") {
      if (n < 0 || m < 0) throw fail("'rot' before 'vertices' and 'edges'");
      if (tok.size() < 2) throw fail("expected 'rot <v> <dart>*'");
      long long v = detail::parse_int(tok[1], line_no);
      if (v < 0 || v >= n) throw fail("vertex " + tok[1] + " out of range");
      if (rot_seen[static_cast<std::size_t>(v)]) throw fail("rotation of vertex " + tok[1] + " given twice");
      rot_seen[static_cast<std::size_t>(v)] = true;
      auto& rot = rotation[static_cast<std::size_t>(v)];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long d = detail::parse_int(tok[i], line_no);
        if (d < 0 || d >= 2 * m) throw fail("dart " + tok[i] + " out of range");
        rot.push_back(Dart{static_cast<int>(d)});
      }
    } else {
      throw fail("unknown directive '" + key + "'");
    }
  }
  if (!header) throw InputError("empty input, expected header 'peg 1'");
  if (n < 0) throw InputError("missing 'vertices' line");
  if (m < 0) throw InputError("missing 'edges' line");
  for (long long e = 0; e < m; ++e)
    if (!edge_seen[static_cast<std::size_t>(e)]) throw InputError("edge " + std::to_string(e) + " is not defined");
  for (long long v = 0; v < n; ++v)
    if (!rot_seen[static_cast<std::size_t>(v)])
      throw InputError("missing rotation for vertex " + std::to_string(v));

  ParsedGraph out{EmbeddedGraph(static_cast<int>(n), std::move(endpoints), std::move(rotation)), {}};
  if (!out.graph.is_connected())
    out.warnings.push_back("graph is disconnected (" + std::to_string(out.graph.component_count()) + " components)");
  return out;
}

inline std::string serialize_peg(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "peg 1\n";
  out << "vertices " << g.vertex_count() << "\n";
  out << "edges " << g.edge_count() << "\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    out << "e " << e << ' ' << u << ' ' << v << "\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v;
    for (Dart d : g.rotation(v)) out << ' ' << d.id;
    out << "\n";
  }
  return out.str();
}

}  // namespace facet
