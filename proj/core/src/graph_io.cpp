#include "timcolor/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace timcolor {

using nlohmann::json;

LabeledGraph labeled_graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw GraphError("graph JSON: expected an object with integer field \"n\"");
  }
  auto n = doc.at("n").get<long long>();
  if (n < 0) throw GraphError("graph JSON: negative vertex count");
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw GraphError("graph JSON: edges must be [i,j] integer pairs");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  LabeledGraph out{make_graph(static_cast<std::size_t>(n), edges), {}};
  if (doc.contains("labels")) {
    for (const auto& [key, value] : doc.at("labels").items()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::exception&) {
        throw GraphError("graph JSON: label key '" + key + "' is not a vertex index");
      }
      if (idx >= static_cast<std::size_t>(n)) {
        throw GraphError("graph JSON: label for unknown vertex " + key);
      }
      out.labels[VertexId(static_cast<std::uint32_t>(idx))] =
          value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return out;
}

Graph graph_from_json(std::string_view text) { return labeled_graph_from_json(text).graph; }

std::string graph_to_json(const Graph& g, const VertexLabels& labels) {
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].value != i) {
      throw GraphError("graph_to_json: vertex ids must be 0..n-1 (found " +
                       to_string(vs[i]) + ")");
    }
  }
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a.value, b.value});
  json doc = {{"n", vs.size()}, {"edges", edges}};
  if (!labels.empty()) {
    json lab = json::object();
    for (const auto& [v, text] : labels) lab[std::to_string(v.value)] = text;
    doc["labels"] = lab;
  }
  return doc.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LabeledGraph load_graph_file(const std::string& path) {
  return labeled_graph_from_json(read_text_file(path));
}

}  // namespace timcolor
