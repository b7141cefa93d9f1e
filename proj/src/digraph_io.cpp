#include <charconv>
#include <optional>

#include <json.hpp>

#include "twocycles/digraph.hpp"
#include "twocycles/error.hpp"

namespace twocycles {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int& value) {
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && end == token.data() + token.size();
}

[[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string& msg) {
  throw Error(kind, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "edge-list") return Format::EdgeList;
  if (name == "dot") return Format::Dot;
  if (name == "json") return Format::Json;
  throw Error(ErrorKind::Parse, "unknown format '" + std::string(name) + "'");
}

Digraph parse_digraph(std::string_view text) {
  std::optional<Digraph> graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!graph) {
      int n = 0;
      if (!parse_int(line, n) || n < 0) {
        fail(ErrorKind::MalformedLine, line_no, "expected vertex count, got '" + std::string(line) + "'");
      }
      if (n > kMaxVertices) {
        fail(ErrorKind::TooManyVertices, line_no,
             "vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
      }
      graph.emplace(n);
      continue;
    }

    const auto space = line.find(' ');
    int u = 0;
    int v = 0;
    if (space == std::string_view::npos || !parse_int(line.substr(0, space), u) ||
        !parse_int(line.substr(space + 1), v)) {
      fail(ErrorKind::MalformedLine, line_no, "expected 'u v', got '" + std::string(line) + "'");
    }
    if (u < 0 || v < 0 || u >= graph->order() || v >= graph->order()) {
      fail(ErrorKind::VertexOutOfRange, line_no,
           "arc " + std::to_string(u) + " -> " + std::to_string(v) + " leaves [0," +
               std::to_string(graph->order()) + ")");
    }
    if (graph->has_arc(u, v)) {
      fail(ErrorKind::DuplicateArc, line_no,
           "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
    }
    graph->add_arc(u, v);
  }
  if (!graph) fail(ErrorKind::MalformedLine, line_no, "missing vertex count");
  return *graph;
}

std::string render_edge_list(const Digraph& d) {
  std::string out = std::to_string(d.order()) + "\n";
  for (auto [u, v] : d.arcs()) {
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

std::string render_dot(const Digraph& d) {
  std::string out = "digraph G {\n";
  for (auto [u, v] : d.arcs()) {
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string render_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  nlohmann::ordered_json doc;
  doc["n"] = d.order();
  doc["arcs"] = std::move(arcs);
  return doc.dump() + "\n";
}

std::string render_digraph(const Digraph& d, Format format) {
  switch (format) {
    case Format::EdgeList: return render_edge_list(d);
    case Format::Dot: return render_dot(d);
    case Format::Json: return render_json(d);
  }
  return {};
}

std::string render_witness_json(const CycleWitness& w) {
  nlohmann::ordered_json doc;
  doc["k"] = w.k();
  doc["cycles"] = w.cycles;
  return doc.dump() + "\n";
}

}  // namespace twocycles
