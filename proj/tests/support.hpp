#pragma once

#include <string>
#include <utility>
#include <vector>

#include "timcolor/graph.hpp"
#include "timcolor/graph_io.hpp"

inline std::string fixture(const std::string& name) {
  return std::string(TIMCOLOR_FIXTURE_DIR) + "/" + name;
}

inline timcolor::Graph load_fixture_graph(const std::string& name) {
  return timcolor::load_graph_file(fixture(name)).graph;
}

inline timcolor::VertexId V(std::uint32_t i) { return timcolor::VertexId(i); }

/// 1-based figure label v_k to the 0-based fixture id.
inline timcolor::VertexId P(std::uint32_t k) { return timcolor::VertexId(k - 1); }

inline std::vector<std::pair<int, int>> edge_indices(const timcolor::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : g.edges()) out.emplace_back(a.value, b.value);
  return out;
}
