#include "timcolor/generators.hpp"

#include <algorithm>
#include <cmath>

#include "timcolor/recognition.hpp"

namespace timcolor {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

TopologyGraph random_chordal_bipartite(int sources, int destinations, double density, Rng& rng) {
  if (sources < 1 || destinations < 1) {
    throw GraphError("random_chordal_bipartite: need at least one source and one destination");
  }
  TopologyGraph t(sources, destinations);
  // Spanning tree: every new vertex hangs off a random placed vertex of the
  // other side.
  std::vector<int> placed_src{uniform(rng, 0, sources - 1)};
  std::vector<int> placed_dst{uniform(rng, 0, destinations - 1)};
  t.add_link(placed_dst[0], placed_src[0]);
  std::vector<int> rest;  // sources as i, destinations as sources + j
  for (int i = 0; i < sources; ++i) {
    if (i != placed_src[0]) rest.push_back(i);
  }
  for (int j = 0; j < destinations; ++j) {
    if (j != placed_dst[0]) rest.push_back(sources + j);
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (int x : rest) {
    if (x < sources) {
      int j = placed_dst[uniform(rng, 0, static_cast<int>(placed_dst.size()) - 1)];
      t.add_link(j, x);
      placed_src.push_back(x);
    } else {
      int i = placed_src[uniform(rng, 0, static_cast<int>(placed_src.size()) - 1)];
      t.add_link(x - sources, i);
      placed_dst.push_back(x - sources);
    }
  }

  Graph b = t.bipartite_graph();
  const auto attempts = static_cast<long>(std::lround(density * sources * destinations));
  for (long a = 0; a < attempts; ++a) {
    int i = uniform(rng, 0, sources - 1);
    int j = uniform(rng, 0, destinations - 1);
    if (t.connected(j, i)) continue;
    VertexId src(static_cast<std::uint32_t>(i));
    VertexId dst(static_cast<std::uint32_t>(sources + j));
    b.add_edge(src, dst);
    if (has_hole_through_edge(b, src, dst)) {
      b.remove_edge(src, dst);
    } else {
      t.add_link(j, i);
    }
  }
  return t;
}

TopologyGraph random_bipartite(int sources, int destinations, double p, Rng& rng) {
  TopologyGraph t(sources, destinations);
  std::bernoulli_distribution coin(p);
  for (int j = 0; j < destinations; ++j) {
    for (int i = 0; i < sources; ++i) {
      if (coin(rng)) t.add_link(j, i);
    }
  }
  return t;
}

Graph random_weakly_chordal(std::size_t n, double density, Rng& rng) {
  Graph g(n);
  if (n < 2) return g;
  const auto attempts = static_cast<long>(std::lround(density * n * (n - 1) / 2.0));
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  for (long a = 0; a < attempts; ++a) {
    VertexId u(pick(rng));
    VertexId v(pick(rng));
    if (u == v || g.adjacent(u, v)) continue;
    if (insertion_keeps_weakly_chordal(g, u, v)) g.add_edge(u, v);
  }
  return g;
}

}  // namespace timcolor
