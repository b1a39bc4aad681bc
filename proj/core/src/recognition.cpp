#include "timcolor/recognition.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "detail.hpp"

namespace timcolor {

namespace detail {

Bitset reachable(const Graph& g, std::size_t start, const Bitset& allowed,
                 std::optional<std::size_t> stop_at) {
  Bitset seen(g.slot_count());
  Bitset frontier(g.slot_count());
  frontier.set(start);
  seen.set(start);
  while (frontier.any()) {
    Bitset next(g.slot_count());
    for_each_bit(frontier, [&](std::size_t s) { next |= g.slot_neighbors(s); });
    next &= allowed;
    next -= seen;
    seen |= next;
    if (stop_at && seen.test(*stop_at)) break;
    frontier.swap(next);
  }
  return seen;
}

bool two_pair_slots(const Graph& g, std::size_t x, std::size_t y) {
  if (x == y || g.slot_neighbors(x).test(y)) return false;
  Bitset allowed = g.live_slots() - (g.slot_neighbors(x) & g.slot_neighbors(y));
  return !reachable(g, x, allowed, y).test(y);
}

namespace {

// Connected components of the subgraph induced by region.
std::vector<Bitset> components_of(const Graph& g, const Bitset& region) {
  std::vector<Bitset> out;
  Bitset left = region;
  for (auto s = left.find_first(); s != npos; s = left.find_first()) {
    Bitset comp = reachable(g, s, region);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

// Shortest path from a to d whose interior lies in region, interior only.
std::vector<std::size_t> interior_path(const Graph& g, std::size_t a, std::size_t d,
                                       const Bitset& region) {
  std::vector<std::size_t> parent(g.slot_count(), npos);
  std::vector<std::size_t> frontier;
  Bitset seen(g.slot_count());
  for_each_bit(g.slot_neighbors(a) & region, [&](std::size_t s) {
    seen.set(s);
    parent[s] = a;
    frontier.push_back(s);
  });
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto s : frontier) {
      if (g.slot_neighbors(s).test(d)) {
        std::vector<std::size_t> path;
        for (auto t = s; t != a; t = parent[t]) path.push_back(t);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for_each_bit((g.slot_neighbors(s) & region) - seen, [&](std::size_t t) {
        seen.set(t);
        parent[t] = s;
        next.push_back(t);
      });
    }
    frontier.swap(next);
  }
  return {};
}

}  // namespace

// A hole through b-c contains an induced path a-b-c-d whose ends are joined by
// a path avoiding N[b] | N[c]; any such a,d pair closes a hole via a shortest
// connecting path.
std::optional<std::vector<std::size_t>> hole_through_edge_slots(const Graph& g, std::size_t b,
                                                                std::size_t c) {
  const Bitset& nb = g.slot_neighbors(b);
  const Bitset& nc = g.slot_neighbors(c);
  Bitset ends_b = nb - nc;
  ends_b.reset(c);
  Bitset ends_c = nc - nb;
  ends_c.reset(b);
  if (ends_b.none() || ends_c.none()) return std::nullopt;

  Bitset region = g.live_slots() - (nb | nc);
  for (const auto& comp : components_of(g, region)) {
    Bitset touching_c(g.slot_count());
    for_each_bit(ends_c, [&](std::size_t d) {
      if (g.slot_neighbors(d).intersects(comp)) touching_c.set(d);
    });
    if (touching_c.none()) continue;
    for (auto a = ends_b.find_first(); a != npos; a = ends_b.find_next(a)) {
      if (!g.slot_neighbors(a).intersects(comp)) continue;
      Bitset partners = touching_c - g.slot_neighbors(a);
      auto d = partners.find_first();
      if (d == npos) continue;
      auto mid = interior_path(g, a, d, comp);
      std::vector<std::size_t> cycle{b, c, d};
      cycle.insert(cycle.end(), mid.rbegin(), mid.rend());
      cycle.push_back(a);
      return cycle;
    }
  }
  return std::nullopt;
}

}  // namespace detail

using detail::for_each_bit;
using detail::npos;

std::optional<std::vector<VertexId>> find_hole(const Graph& g) {
  const Bitset& live = g.live_slots();
  for (auto b = live.find_first(); b != npos; b = live.find_next(b)) {
    const Bitset& row = g.slot_neighbors(b);
    for (auto c = row.find_next(b); c != npos; c = row.find_next(c)) {
      if (auto hole = detail::hole_through_edge_slots(g, b, c)) {
        std::vector<VertexId> out;
        out.reserve(hole->size());
        for (auto s : *hole) out.push_back(g.slot_id(s));
        return out;
      }
    }
  }
  return std::nullopt;
}

bool has_hole_through_edge(const Graph& g, VertexId u, VertexId v) {
  if (!g.adjacent(u, v)) throw GraphError("has_hole_through_edge: edge absent");
  return detail::hole_through_edge_slots(g, g.slot_of(u), g.slot_of(v)).has_value();
}

bool has_hole_through_vertex(const Graph& g, VertexId u) {
  auto su = g.slot_of(u);
  const Bitset& row = g.slot_neighbors(su);
  for (auto c = row.find_first(); c != npos; c = row.find_next(c)) {
    if (detail::hole_through_edge_slots(g, su, c)) return true;
  }
  return false;
}

bool is_weakly_chordal(const Graph& g) {
  return !find_hole(g) && !find_hole(complement(g));
}

bool insertion_keeps_weakly_chordal(const Graph& g, VertexId u, VertexId v) {
  Graph h = insert_edge(g, u, v);
  if (has_hole_through_edge(h, u, v)) return false;
  // Every antihole of h is new, so its complement-hole passes through u.
  return !has_hole_through_vertex(complement(h), u);
}

bool deletion_keeps_weakly_chordal(const Graph& g, VertexId u, VertexId v) {
  Graph h = delete_edge(g, u, v);
  if (has_hole_through_vertex(h, u)) return false;
  return !has_hole_through_edge(complement(h), u, v);
}

bool is_chordal_bipartite(const Graph& g, const Bipartition& parts) {
  std::set<VertexId> left(parts.left.begin(), parts.left.end());
  std::set<VertexId> right(parts.right.begin(), parts.right.end());
  if (left.size() != parts.left.size() || right.size() != parts.right.size()) {
    throw GraphError("is_chordal_bipartite: repeated vertex in bipartition");
  }
  if (left.size() + right.size() != g.vertex_count()) {
    throw GraphError("is_chordal_bipartite: bipartition does not cover the graph");
  }
  for (auto v : left) {
    if (!g.contains(v) || right.contains(v)) {
      throw GraphError("is_chordal_bipartite: invalid bipartition at " + to_string(v));
    }
  }
  for (auto v : right) {
    if (!g.contains(v)) {
      throw GraphError("is_chordal_bipartite: invalid bipartition at " + to_string(v));
    }
  }
  for (auto [a, b] : g.edges()) {
    if (left.contains(a) == left.contains(b)) {
      throw GraphError("is_chordal_bipartite: edge (" + to_string(a) + "," + to_string(b) +
                       ") does not cross the bipartition");
    }
  }
  // In a bipartite graph every hole has length >= 6.
  return !find_hole(g);
}

bool is_two_pair(const Graph& g, VertexId x, VertexId y) {
  if (x == y) return false;
  return detail::two_pair_slots(g, g.slot_of(x), g.slot_of(y));
}

std::optional<TwoPair> find_two_pair(const Graph& g) {
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto si = g.slot_of(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (detail::two_pair_slots(g, si, g.slot_of(vs[j]))) return TwoPair{vs[i], vs[j]};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> chordless_path_lengths(const Graph& g, VertexId x, VertexId y) {
  std::vector<std::size_t> lengths;
  std::vector<VertexId> path{x};
  Bitset on_path(g.slot_count());
  on_path.set(g.slot_of(x));
  // Vertices adjacent to some path vertex other than the current end.
  std::function<void(Bitset)> extend = [&](Bitset blocked) {
    auto last = g.slot_of(path.back());
    for (auto w : g.neighbors(path.back())) {
      auto sw = g.slot_of(w);
      if (on_path.test(sw) || blocked.test(sw)) continue;
      if (w == y) {
        lengths.push_back(path.size());
        continue;
      }
      path.push_back(w);
      on_path.set(sw);
      Bitset next_blocked = blocked | g.slot_neighbors(last);
      extend(next_blocked);
      on_path.reset(sw);
      path.pop_back();
    }
  };
  extend(Bitset(g.slot_count()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<TwoPair> enumerate_two_pairs(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw OracleCapExceeded("enumerate_two_pairs: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds cap " + std::to_string(cap));
  }
  std::vector<TwoPair> out;
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      auto lengths = chordless_path_lengths(g, vs[i], vs[j]);
      if (std::all_of(lengths.begin(), lengths.end(), [](auto l) { return l == 2; })) {
        out.push_back({vs[i], vs[j]});
      }
    }
  }
  return out;
}

}  // namespace timcolor
