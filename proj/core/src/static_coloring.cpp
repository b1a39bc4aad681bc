#include "timcolor/static_coloring.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "detail.hpp"

namespace timcolor {

using detail::for_each_bit;
using detail::npos;

namespace {

std::vector<VertexId> bits_to_ids(const Bitset& b) {
  std::vector<VertexId> out;
  for_each_bit(b, [&](std::size_t i) { out.emplace_back(static_cast<std::uint32_t>(i)); });
  return out;
}

Bitset ids_to_bits(const std::vector<VertexId>& ids, std::size_t size) {
  Bitset b(size);
  for (auto v : ids) b.set(v.value);
  return b;
}

// Union of original-graph neighborhoods over a provenance class.
Bitset class_neighbors(const Graph& g, const Bitset& cls) {
  Bitset out(g.original_bound());
  for_each_bit(cls, [&](std::size_t o) {
    const Bitset& row = g.slot_neighbors(g.slot_of(VertexId(static_cast<std::uint32_t>(o))));
    // Original graphs keep slot == id, so the row is indexed by original id.
    for_each_bit(row, [&](std::size_t t) { out.set(t); });
  });
  return out;
}

std::string record_name(const ContractionRecord& r) {
  return "(" + to_string(r.x) + "," + to_string(r.y) + "->" + to_string(r.z) + ")";
}

void require_original(const Graph& g, const char* what) {
  if (g.vertex_count() != g.original_bound() || g.next_id() != g.original_bound()) {
    throw GraphError(std::string(what) + ": expected an uncontracted graph");
  }
}

}  // namespace

std::pair<Graph, VertexId> contract(const Graph& g, const TwoPair& p, bool check_weakly_chordal) {
  if (!g.contains(p.x) || !g.contains(p.y) || !is_two_pair(g, p.x, p.y)) {
    throw GraphError("contract: (" + to_string(p.x) + "," + to_string(p.y) +
                     ") is not a two-pair");
  }
  Graph h = g;
  VertexId z = h.merge(p.x, p.y);
  if (check_weakly_chordal && !is_weakly_chordal(h)) {
    throw NotWeaklyChordal("contraction of (" + to_string(p.x) + "," + to_string(p.y) +
                           ") produced a graph that is not weakly chordal");
  }
  return {std::move(h), z};
}

PairSelector random_pair_selector(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const Graph& g) -> std::optional<TwoPair> {
    std::vector<TwoPair> pairs;
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (detail::two_pair_slots(g, g.slot_of(vs[i]), g.slot_of(vs[j]))) {
          pairs.push_back({vs[i], vs[j]});
        }
      }
    }
    if (pairs.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    return pairs[pick(*rng)];
  };
}

Replay replay_order(const Graph& g, const SolutionOrder& order) {
  require_original(g, "replay_order");
  Replay out{g, {}};
  out.order.records.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& r = order.records[i];
    Graph& j = out.final_graph;
    if (!j.contains(r.x) || !j.contains(r.y) || !is_two_pair(j, r.x, r.y)) {
      throw GraphError("order step " + std::to_string(i) + " " + record_name(r) +
                       " is not a two-pair");
    }
    ContractionRecord full{r.x, r.y, {}, j.provenance(r.x), j.provenance(r.y)};
    full.z = j.merge(r.x, r.y);
    if (full.z != r.z) {
      throw GraphError("order step " + std::to_string(i) + " " + record_name(r) +
                       " names z, but the contraction mints " + to_string(full.z));
    }
    out.order.records.push_back(std::move(full));
  }
  return out;
}

Lifted lift(const Graph& g, const Replay& replay) {
  const Graph& fin = replay.final_graph;
  if (!fin.is_complete()) throw GraphError("lift: order does not end in a clique");
  const std::size_t n = g.original_bound();

  Lifted out;
  auto final_vs = fin.vertices();
  out.color_count = static_cast<int>(final_vs.size());
  for (std::size_t k = 0; k < final_vs.size(); ++k) {
    for (auto o : fin.provenance(final_vs[k])) out.coloring[o] = static_cast<Color>(k + 1);
  }

  std::vector<Bitset> clique;
  for (auto v : final_vs) clique.push_back(fin.provenance_bits(v));

  const auto& recs = replay.order.records;
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    Bitset xs = ids_to_bits(it->x_members, n);
    Bitset ys = ids_to_bits(it->y_members, n);
    Bitset zs = xs | ys;
    auto pos = std::find(clique.begin(), clique.end(), zs);
    if (pos == clique.end()) continue;
    auto x_nbrs = class_neighbors(g, xs);
    bool x_ok = true;
    for (const auto& other : clique) {
      if (&other != &*pos && !other.intersects(x_nbrs)) {
        x_ok = false;
        break;
      }
    }
    if (x_ok) {
      *pos = std::move(xs);
      continue;
    }
    auto y_nbrs = class_neighbors(g, ys);
    for (const auto& other : clique) {
      if (&other != &*pos && !other.intersects(y_nbrs)) {
        throw std::logic_error("clique lift: neither side of " + record_name(*it) +
                               " is adjacent to the rest of the clique");
      }
    }
    *pos = std::move(ys);
  }
  for (const auto& cls : clique) {
    auto ids = bits_to_ids(cls);
    out.clique.insert(out.clique.end(), ids.begin(), ids.end());
  }
  std::sort(out.clique.begin(), out.clique.end());
  return out;
}

ColoringState state_from_order(const Graph& g, const SolutionOrder& order) {
  auto replay = replay_order(g, order);
  auto lifted = lift(g, replay);
  return {g, std::move(lifted.coloring), lifted.color_count, std::move(lifted.clique),
          std::move(replay.order)};
}

ColoringState static_color(const Graph& g, const StaticOptions& opts) {
  require_original(g, "static_color");
  if (opts.verify && !is_weakly_chordal(g)) {
    throw NotWeaklyChordal("static_color: input graph is not weakly chordal");
  }
  Replay replay{g, {}};
  Graph& j = replay.final_graph;
  while (!j.is_complete()) {
    auto p = opts.selector ? opts.selector(j) : find_two_pair(j);
    if (!p) {
      throw NotWeaklyChordal("static_color: non-complete graph with " +
                             std::to_string(j.vertex_count()) +
                             " vertices has no two-pair; input is not weakly chordal");
    }
    if (opts.selector && !is_two_pair(j, p->x, p->y)) {
      throw GraphError("static_color: selector returned a pair that is not a two-pair");
    }
    ContractionRecord r{p->x, p->y, {}, j.provenance(p->x), j.provenance(p->y)};
    r.z = j.merge(p->x, p->y);
    replay.order.records.push_back(std::move(r));
    if (opts.verify && !is_weakly_chordal(j)) {
      throw NotWeaklyChordal("static_color: contraction produced a hole or antihole");
    }
  }
  auto lifted = lift(g, replay);
  return {g, std::move(lifted.coloring), lifted.color_count, std::move(lifted.clique),
          std::move(replay.order)};
}

VerifyResult verify_state(const ColoringState& s) {
  VerifyResult res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.diagnostics.push_back(std::move(msg));
  };
  const Graph& g = s.graph;

  std::set<Color> used;
  for (auto v : g.vertices()) {
    auto it = s.coloring.find(v);
    if (it == s.coloring.end()) {
      fail("vertex " + to_string(v) + " has no color");
      continue;
    }
    if (it->second < 1 || it->second > s.color_count) {
      fail("vertex " + to_string(v) + " has color " + std::to_string(it->second) +
           " outside 1.." + std::to_string(s.color_count));
    }
    used.insert(it->second);
  }
  for (const auto& [v, c] : s.coloring) {
    if (!g.contains(v)) fail("color assigned to unknown vertex " + to_string(v));
  }
  for (auto [a, b] : g.edges()) {
    auto ia = s.coloring.find(a);
    auto ib = s.coloring.find(b);
    if (ia != s.coloring.end() && ib != s.coloring.end() && ia->second == ib->second) {
      fail("edge (" + to_string(a) + "," + to_string(b) + ") is monochromatic with color " +
           std::to_string(ia->second));
    }
  }
  if (static_cast<int>(used.size()) != s.color_count) {
    fail("color_count " + std::to_string(s.color_count) + " but " +
         std::to_string(used.size()) + " distinct colors are used");
  }

  if (static_cast<int>(s.clique.size()) != s.color_count) {
    fail("clique has " + std::to_string(s.clique.size()) + " vertices, color_count is " +
         std::to_string(s.color_count));
  }
  for (std::size_t i = 0; i < s.clique.size(); ++i) {
    if (!g.contains(s.clique[i])) {
      fail("clique vertex " + to_string(s.clique[i]) + " is not in the graph");
      continue;
    }
    for (std::size_t j = i + 1; j < s.clique.size(); ++j) {
      if (g.contains(s.clique[j]) && !g.adjacent(s.clique[i], s.clique[j])) {
        fail("clique pair (" + to_string(s.clique[i]) + "," + to_string(s.clique[j]) +
             ") is not an edge");
      }
    }
  }

  try {
    auto replay = replay_order(g, s.order);
    if (!replay.final_graph.is_complete()) {
      fail("order does not contract the graph to a clique");
    } else if (static_cast<int>(replay.final_graph.vertex_count()) != s.color_count) {
      fail("order ends in a clique of " + std::to_string(replay.final_graph.vertex_count()) +
           " vertices, color_count is " + std::to_string(s.color_count));
    }
    for (std::size_t i = 0; i < s.order.size(); ++i) {
      const auto& given = s.order.records[i];
      const auto& real = replay.order.records[i];
      if ((!given.x_members.empty() || !given.y_members.empty()) &&
          (given.x_members != real.x_members || given.y_members != real.y_members)) {
        fail("order step " + std::to_string(i) + " has stale provenance");
      }
    }
  } catch (const GraphError& e) {
    fail(e.what());
  }
  return res;
}

}  // namespace timcolor
