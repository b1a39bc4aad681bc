#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace timcolor {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Stable vertex identifier. Ids are never recycled inside one graph lineage:
/// contraction mints a fresh id instead of reusing one of its inputs.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Undirected simple graph with stable vertex identities.
 *
 * Internally every vertex occupies a slot; adjacency is a bitset over slots so
 * adjacency tests are O(1) and neighbor iteration is O(n/64 + deg). A
 * contracted vertex takes over the slot of its first parent, so slot indices
 * are only meaningful for the graph value they were read from.
 *
 * Each vertex carries its provenance: the set of original vertex ids merged
 * into it. Originals are the vertices the lineage started with (ids below
 * original_bound()).
 */
class Graph {
 public:
  Graph() = default;

  /// n isolated original vertices with ids 0..n-1.
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const { return live_count_; }
  std::size_t edge_count() const;
  bool empty() const { return live_count_ == 0; }

  /// Live vertex ids in ascending order.
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;  // (a,b) with a < b, sorted

  bool contains(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  std::size_t degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Original ids merged into v, ascending.
  std::vector<VertexId> provenance(VertexId v) const;
  const Bitset& provenance_bits(VertexId v) const;
  /// Live vertex whose provenance contains original o, if any.
  std::optional<VertexId> holder_of(VertexId original) const;

  std::uint32_t original_bound() const { return original_bound_; }
  std::uint32_t next_id() const { return next_id_; }

  // Mutators. These throw GraphError on invalid input.
  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  /// Merge a and b into a freshly minted vertex adjacent to N(a) | N(b).
  /// No two-pair check happens here; see timcolor::contract for that.
  VertexId merge(VertexId a, VertexId b);
  void remove_vertex(VertexId v);

  bool is_complete() const;

  // Slot-level access for the algorithms in this library.
  std::size_t slot_count() const { return slot_ids_.size(); }
  const Bitset& live_slots() const { return live_; }
  const Bitset& slot_neighbors(std::size_t slot) const { return adj_[slot]; }
  VertexId slot_id(std::size_t slot) const { return slot_ids_[slot]; }
  std::size_t slot_of(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b);
  friend Graph complement(const Graph& g);

 private:
  void check_live(VertexId v, const char* what) const;

  std::vector<VertexId> slot_ids_;
  std::vector<Bitset> adj_;
  std::vector<Bitset> prov_;
  Bitset live_;
  std::vector<std::int32_t> slot_of_id_;  // -1 when the id is dead or unknown
  std::size_t live_count_ = 0;
  std::uint32_t original_bound_ = 0;
  std::uint32_t next_id_ = 0;
};

/// Graph on n original vertices with the given index pairs as edges.
Graph make_graph(std::size_t n, std::span<const std::pair<int, int>> edges);
Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges);

Graph insert_edge(const Graph& g, VertexId u, VertexId v);
Graph delete_edge(const Graph& g, VertexId u, VertexId v);

/// Line graph: vertex k stands for source_edges[k] of the input.
struct LineGraph {
  Graph graph;
  std::vector<Edge> source_edges;
};
LineGraph line_graph(const Graph& g);

Graph square(const Graph& g);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

// Common small graphs, used by fixtures and tests.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Connected components as ascending id lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

std::string to_string(VertexId v);
std::ostream& operator<<(std::ostream& os, VertexId v);

}  // namespace timcolor

template <>
struct std::hash<timcolor::VertexId> {
  std::size_t operator()(timcolor::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};
