#pragma once

#include <cstddef>
#include <random>

#include "timcolor/graph.hpp"
#include "timcolor/tim.hpp"

namespace timcolor {

using Rng = std::mt19937_64;

/// Random chordal bipartite topology with M sources and N destinations:
/// a random bipartite spanning tree plus up to density * M * N attempted
/// extra links, each kept only if it closes no hole. M, N >= 1.
TopologyGraph random_chordal_bipartite(int sources, int destinations, double density, Rng& rng);

/// Random bipartite topology with each link present with probability p.
TopologyGraph random_bipartite(int sources, int destinations, double p, Rng& rng);

/// Random weakly chordal graph: starting from n isolated vertices, each of
/// density * n(n-1)/2 random vertex pairs becomes an edge when the
/// result stays weakly chordal.
Graph random_weakly_chordal(std::size_t n, double density, Rng& rng);

}  // namespace timcolor
