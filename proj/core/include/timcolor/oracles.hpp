#pragma once

#include <cstddef>
#include <vector>

#include "timcolor/graph.hpp"
#include "timcolor/recognition.hpp"

namespace timcolor {

/// Exact chromatic number by backtracking. Throws OracleCapExceeded above cap.
int oracle_chromatic(const Graph& g, std::size_t cap = kDefaultOracleCap);

/// A maximum clique by exhaustive search; among maximum cliques the
/// lexicographically smallest ascending id list is returned.
std::vector<VertexId> oracle_max_clique(const Graph& g, std::size_t cap = kDefaultOracleCap);

}  // namespace timcolor
