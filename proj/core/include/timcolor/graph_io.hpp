#pragma once

#include <map>
#include <string>
#include <string_view>

#include "timcolor/graph.hpp"

namespace timcolor {

using VertexLabels = std::map<VertexId, std::string>;

struct LabeledGraph {
  Graph graph;
  VertexLabels labels;
};

/// Parses {"n": int, "edges": [[i,j],...], "labels": {...}}. Throws GraphError.
LabeledGraph labeled_graph_from_json(std::string_view text);
Graph graph_from_json(std::string_view text);

/// Canonical interchange form: edges as [i,j] with i < j in lexicographic
/// order. The graph's vertices must be exactly 0..n-1.
std::string graph_to_json(const Graph& g, const VertexLabels& labels = {});

LabeledGraph load_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace timcolor
