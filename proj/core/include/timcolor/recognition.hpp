#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "timcolor/graph.hpp"

namespace timcolor {

/// Non-adjacent pair whose connecting chordless paths all have two edges.
struct TwoPair {
  VertexId x;
  VertexId y;
  friend auto operator<=>(const TwoPair&, const TwoPair&) = default;
};

/// Default cap on the exhaustive (oracle-only) operations.
inline constexpr std::size_t kDefaultOracleCap = 14;

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Holes and weak chordality.

/// Some chordless cycle of length >= 5, listed in cycle order.
std::optional<std::vector<VertexId>> find_hole(const Graph& g);
/// True iff some hole uses the edge (u,v). Requires (u,v) in E(g).
bool has_hole_through_edge(const Graph& g, VertexId u, VertexId v);
/// True iff some hole passes through u.
bool has_hole_through_vertex(const Graph& g, VertexId u);

bool is_weakly_chordal(const Graph& g);

/// Would g + (u,v) still be weakly chordal? g must be weakly chordal.
bool insertion_keeps_weakly_chordal(const Graph& g, VertexId u, VertexId v);
/// Would g - (u,v) still be weakly chordal? g must be weakly chordal.
bool deletion_keeps_weakly_chordal(const Graph& g, VertexId u, VertexId v);

struct Bipartition {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

/// Throws GraphError if parts is not a bipartition of g.
bool is_chordal_bipartite(const Graph& g, const Bipartition& parts);

// Two-pairs.

/// {x,y} non-adjacent is a two-pair iff x and y are disconnected in
/// g - (N(x) & N(y)).
bool is_two_pair(const Graph& g, VertexId x, VertexId y);

/// Lexicographically smallest two-pair by vertex id.
std::optional<TwoPair> find_two_pair(const Graph& g);

/// Every two-pair, each confirmed by enumerating all chordless x..y paths.
/// Refuses graphs above the cap.
std::vector<TwoPair> enumerate_two_pairs(const Graph& g,
                                         std::size_t cap = kDefaultOracleCap);

/// Length in edges of every chordless path between x and y (exhaustive).
std::vector<std::size_t> chordless_path_lengths(const Graph& g, VertexId x, VertexId y);

}  // namespace timcolor
