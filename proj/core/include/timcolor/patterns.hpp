#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "timcolor/graph.hpp"

namespace timcolor {

struct Pattern {
  std::string name;
  Graph graph;
};

/// Named small graphs searched for as induced subgraphs.
class PatternLibrary {
 public:
  static constexpr std::size_t kMaxPatternVertices = 8;

  PatternLibrary() = default;

  /// Throws GraphError if the pattern exceeds kMaxPatternVertices.
  void add(std::string name, Graph graph);

  const std::vector<Pattern>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }

  /// JSON array of {"name", "n", "edges"} objects.
  static PatternLibrary from_json(std::string_view text);
  static PatternLibrary load(const std::string& path);

 private:
  std::vector<Pattern> patterns_;
};

/// The four forbidden graphs that are defined by formula (K_{2,3} and the
/// complements of 4P_2, P_2 u P_4 and P_6).
PatternLibrary builtin_forbidden_patterns();

struct Embedding {
  std::string pattern;
  /// image[k] is the host vertex matched to pattern vertex k.
  std::vector<VertexId> image;
};

/// One embedding per distinct host vertex set per pattern, found by induced
/// subgraph isomorphism search.
std::vector<Embedding> scan_forbidden(const Graph& g, const PatternLibrary& lib);

}  // namespace timcolor
