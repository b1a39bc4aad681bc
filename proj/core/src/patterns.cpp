#include "timcolor/patterns.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "timcolor/graph_io.hpp"

namespace timcolor {

void PatternLibrary::add(std::string name, Graph graph) {
  if (graph.vertex_count() > kMaxPatternVertices) {
    throw GraphError("pattern " + name + " has more than " +
                     std::to_string(kMaxPatternVertices) + " vertices");
  }
  patterns_.push_back({std::move(name), std::move(graph)});
}

PatternLibrary PatternLibrary::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("pattern library: ") + e.what());
  }
  if (!doc.is_array()) throw GraphError("pattern library: expected a JSON array");
  PatternLibrary lib;
  for (const auto& entry : doc) {
    if (!entry.contains("name")) throw GraphError("pattern library: entry without name");
    lib.add(entry.at("name").get<std::string>(), graph_from_json(entry.dump()));
  }
  return lib;
}

PatternLibrary PatternLibrary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open pattern library " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

PatternLibrary builtin_forbidden_patterns() {
  PatternLibrary lib;
  lib.add("K_{2,3}", make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  lib.add("co-4P_2", complement(make_graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}})));
  lib.add("co-(P_2+P_4)", complement(make_graph(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}})));
  lib.add("co-P_6", complement(path_graph(6)));
  return lib;
}

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), pv_(pattern.vertices()), hv_(host.vertices()) {
    // Match high-degree pattern vertices first; they prune hardest.
    std::stable_sort(pv_.begin(), pv_.end(), [&](VertexId a, VertexId b) {
      return pattern_.degree(a) > pattern_.degree(b);
    });
    used_.assign(hv_.size(), false);
    image_.assign(pv_.size(), VertexId{});
  }

  template <typename Sink>
  void run(Sink&& sink) {
    step(0, sink);
  }

  const std::vector<VertexId>& order() const { return pv_; }

 private:
  template <typename Sink>
  void step(std::size_t k, Sink& sink) {
    if (k == pv_.size()) {
      sink(image_);
      return;
    }
    for (std::size_t h = 0; h < hv_.size(); ++h) {
      if (used_[h]) continue;
      if (host_.degree(hv_[h]) < pattern_.degree(pv_[k])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = pattern_.adjacent(pv_[i], pv_[k]) == host_.adjacent(image_[i], hv_[h]);
      }
      if (!ok) continue;
      used_[h] = true;
      image_[k] = hv_[h];
      step(k + 1, sink);
      used_[h] = false;
    }
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<VertexId> pv_;
  std::vector<VertexId> hv_;
  std::vector<bool> used_;
  std::vector<VertexId> image_;
};

}  // namespace

std::vector<Embedding> scan_forbidden(const Graph& g, const PatternLibrary& lib) {
  std::vector<Embedding> out;
  for (const auto& pat : lib.patterns()) {
    if (pat.graph.vertex_count() > g.vertex_count()) continue;
    InducedMatcher matcher(pat.graph, g);
    auto pattern_vertices = pat.graph.vertices();
    std::set<std::vector<VertexId>> seen;
    matcher.run([&](const std::vector<VertexId>& image) {
      std::vector<VertexId> key = image;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      // Report the image in pattern vertex order.
      std::vector<VertexId> ordered(image.size());
      const auto& order = matcher.order();
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto pos = std::lower_bound(pattern_vertices.begin(), pattern_vertices.end(), order[i]) -
                   pattern_vertices.begin();
        ordered[static_cast<std::size_t>(pos)] = image[i];
      }
      out.push_back({pat.name, std::move(ordered)});
    });
  }
  return out;
}

}  // namespace timcolor
