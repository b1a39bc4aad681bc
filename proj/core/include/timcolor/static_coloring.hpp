#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "timcolor/graph.hpp"
#include "timcolor/recognition.hpp"

namespace timcolor {

using Color = int;  // 1..color_count

/// One step (x, y -> z) of a two-pair solution order, with the original
/// vertices each side stood for when it was contracted.
struct ContractionRecord {
  VertexId x;
  VertexId y;
  VertexId z;
  std::vector<VertexId> x_members;
  std::vector<VertexId> y_members;

  friend bool operator==(const ContractionRecord&, const ContractionRecord&) = default;
};

struct SolutionOrder {
  std::vector<ContractionRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  friend bool operator==(const SolutionOrder&, const SolutionOrder&) = default;
};

struct ColoringState {
  Graph graph;                         // uncontracted
  std::map<VertexId, Color> coloring;  // every vertex of graph
  int color_count = 0;
  std::vector<VertexId> clique;  // ascending original ids
  SolutionOrder order;
};

class NotWeaklyChordal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contract a validated two-pair. Throws GraphError if p is not a two-pair.
/// Returns the contracted graph and the minted vertex.
std::pair<Graph, VertexId> contract(const Graph& g, const TwoPair& p,
                                    bool check_weakly_chordal = false);

/// Chooses the next two-pair to contract; nullopt means "none exists".
using PairSelector = std::function<std::optional<TwoPair>(const Graph&)>;

/// Uniformly random two-pair, for order-independence experiments.
PairSelector random_pair_selector(std::uint64_t seed);

struct StaticOptions {
  /// Check weak chordality of the input and after every contraction.
  bool verify = false;
  /// Defaults to find_two_pair (lexicographically smallest pair).
  PairSelector selector;
};

/// Simultaneous maximum clique and minimum coloring by repeated two-pair
/// contraction. Throws NotWeaklyChordal when a non-complete graph has no
/// two-pair (or, with verify on, when any intermediate graph has a hole or
/// antihole).
ColoringState static_color(const Graph& g, const StaticOptions& opts = {});

/// Rebuild a full state from a given order: replays it (every step must be a
/// two-pair), then lifts clique and colors. Throws GraphError on bad orders.
ColoringState state_from_order(const Graph& g, const SolutionOrder& order);

/// Result of replaying an order from the original graph.
struct Replay {
  Graph final_graph;
  SolutionOrder order;  // with provenance filled in
};
/// Throws GraphError naming the first step that is not a valid two-pair.
Replay replay_order(const Graph& g, const SolutionOrder& order);

/// Lift the clique and the coloring back through a complete order.
/// Colors of the final clique follow ascending vertex id.
struct Lifted {
  std::vector<VertexId> clique;
  std::map<VertexId, Color> coloring;
  int color_count = 0;
};
Lifted lift(const Graph& g, const Replay& replay);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

VerifyResult verify_state(const ColoringState& s);

}  // namespace timcolor
