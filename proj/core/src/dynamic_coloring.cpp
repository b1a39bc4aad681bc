#include "timcolor/dynamic_coloring.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include "detail.hpp"

namespace timcolor {

using detail::for_each_bit;
using detail::npos;

std::string to_string(EventKind k) { return k == EventKind::insert ? "insert" : "delete"; }

std::string to_string(UpdateCase c) {
  switch (c) {
    case UpdateCase::I1: return "I-1";
    case UpdateCase::I21: return "I-2-1";
    case UpdateCase::I22: return "I-2-2";
    case UpdateCase::I31: return "I-3-1";
    case UpdateCase::I32: return "I-3-2";
    case UpdateCase::D1: return "D-1";
    case UpdateCase::D2: return "D-2";
  }
  return "?";
}

namespace {

Bitset to_bits(const std::vector<VertexId>& ids, std::size_t n) {
  Bitset b(n);
  for (auto v : ids) b.set(v.value);
  return b;
}

std::optional<VertexId> holder_exact(const Graph& j, const Bitset& cls) {
  auto first = cls.find_first();
  if (first == npos) return std::nullopt;
  auto h = j.holder_of(VertexId(static_cast<std::uint32_t>(first)));
  if (h && j.provenance_bits(*h) == cls) return h;
  return std::nullopt;
}

using PairKey = std::pair<Bitset, Bitset>;

PairKey key_of(const ContractionRecord& r, std::size_t n) {
  auto a = to_bits(r.x_members, n);
  auto b = to_bits(r.y_members, n);
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool clique_of_size(const Graph& g, Bitset cand, int need) {
  if (need <= 0) return true;
  if (static_cast<int>(cand.count()) < need) return false;
  for (auto s = cand.find_first(); s != npos; s = cand.find_first()) {
    cand.reset(s);
    if (clique_of_size(g, cand & g.slot_neighbors(s), need - 1)) return true;
    if (static_cast<int>(cand.count()) < need) return false;
  }
  return false;
}

// Vertices of g colored a or b reachable from start through such vertices.
Bitset kempe_component(const Graph& g, const std::map<VertexId, Color>& f, VertexId start,
                       Color a, Color b) {
  Bitset allowed(g.slot_count());
  for (auto [v, c] : f) {
    if (c == a || c == b) allowed.set(g.slot_of(v));
  }
  return detail::reachable(g, g.slot_of(start), allowed);
}

// Relabel the classes of `fresh` (colors 1..k) onto 1..k so that as many
// vertices as possible keep their color from `old`.
std::map<VertexId, Color> best_relabel(const std::map<VertexId, Color>& fresh,
                                       const std::map<VertexId, Color>& old, int k) {
  std::vector<std::vector<int>> agree(k, std::vector<int>(k, 0));
  for (auto [v, c] : fresh) {
    auto it = old.find(v);
    if (it != old.end() && it->second >= 1 && it->second <= k) ++agree[c - 1][it->second - 1];
  }
  using WeightedGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_weight_t, long>>;
  WeightedGraph bg(2 * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      // Shift by one so that every edge is worth taking.
      boost::add_edge(a, k + b, static_cast<long>(agree[a][b]) + 1, bg);
    }
  }
  std::vector<boost::graph_traits<WeightedGraph>::vertex_descriptor> mate(2 * k);
  boost::maximum_weighted_matching(bg, mate.data());

  std::vector<int> target(k, -1);
  std::vector<bool> taken(k, false);
  for (int a = 0; a < k; ++a) {
    auto m = mate[a];
    if (m != boost::graph_traits<WeightedGraph>::null_vertex() && static_cast<int>(m) >= k) {
      target[a] = static_cast<int>(m) - k;
      taken[target[a]] = true;
    }
  }
  for (int a = 0, free_b = 0; a < k; ++a) {
    if (target[a] >= 0) continue;
    while (taken[free_b]) ++free_b;
    target[a] = free_b;
    taken[free_b] = true;
  }
  std::map<VertexId, Color> out;
  for (auto [v, c] : fresh) out[v] = target[c - 1] + 1;
  return out;
}

std::vector<VertexId> changed_vertices(const std::map<VertexId, Color>& before,
                                       const std::map<VertexId, Color>& after) {
  std::vector<VertexId> out;
  for (auto [v, c] : after) {
    auto it = before.find(v);
    if (it == before.end() || it->second != c) out.push_back(v);
  }
  return out;
}

std::size_t count_changes(const std::map<VertexId, Color>& before,
                          const std::map<VertexId, Color>& after) {
  return changed_vertices(before, after).size();
}

std::optional<Color> free_color(const Graph& h, const std::map<VertexId, Color>& f, VertexId w,
                                int palette) {
  std::vector<bool> used(palette + 1, false);
  for (auto x : h.neighbors(w)) {
    auto c = f.at(x);
    if (c <= palette) used[c] = true;
  }
  for (Color c = 1; c <= palette; ++c) {
    if (!used[c]) return c;
  }
  return std::nullopt;
}

// Endpoints u and v share color a in a proper coloring of g = h - (u,v).
// Recolor with at most `palette` colors, touching as few vertices as we can.
std::map<VertexId, Color> separate_endpoints(const Graph& g, const Graph& h,
                                             const std::map<VertexId, Color>& f, VertexId u,
                                             VertexId v, int palette,
                                             const std::map<VertexId, Color>& lifted) {
  for (auto w : {u, v}) {
    if (auto c = free_color(h, f, w, palette)) {
      auto out = f;
      out[w] = *c;
      return out;
    }
  }

  const Color a = f.at(u);
  std::optional<Bitset> best_chain;
  Color best_b = 0;
  for (auto w : {u, v}) {
    auto other = g.slot_of(w == u ? v : u);
    for (Color b = 1; b <= palette; ++b) {
      if (b == a) continue;
      auto comp = kempe_component(g, f, w, a, b);
      if (comp.test(other)) continue;
      if (!best_chain || comp.count() < best_chain->count()) {
        best_chain = std::move(comp);
        best_b = b;
      }
    }
  }

  auto relabeled = best_relabel(lifted, f, palette);
  if (best_chain && best_chain->count() <= count_changes(f, relabeled)) {
    auto out = f;
    for_each_bit(*best_chain, [&](std::size_t s) {
      auto& c = out[g.slot_id(s)];
      c = (c == a) ? best_b : a;
    });
    return out;
  }
  return relabeled;
}

bool proper(const Graph& g, const std::map<VertexId, Color>& f) {
  for (auto [a, b] : g.edges()) {
    if (f.at(a) == f.at(b)) return false;
  }
  return true;
}

void fill_fallback(const ColoringState& s, const Graph& h, std::string reason,
                   ColoringState& out, UpdateReport& rep) {
  out = static_color(h);
  rep.fallback_used = true;
  rep.fallback_reason = std::move(reason);
  const std::size_t n = h.original_bound();
  std::set<PairKey> old_keys, new_keys;
  for (const auto& r : s.order.records) old_keys.insert(key_of(r, n));
  for (const auto& r : out.order.records) new_keys.insert(key_of(r, n));
  rep.pairs_removed.clear();
  rep.pairs_added.clear();
  for (const auto& r : s.order.records) {
    if (!new_keys.contains(key_of(r, n))) rep.pairs_removed.push_back(r);
  }
  for (const auto& r : out.order.records) {
    if (!old_keys.contains(key_of(r, n))) rep.pairs_added.push_back(r);
  }
  rep.colors_after = out.color_count;
  rep.omega_after = static_cast<int>(out.clique.size());
  rep.recolored = changed_vertices(s.coloring, out.coloring);
}

void check_endpoints(const ColoringState& s, VertexId u, VertexId v, const char* what) {
  if (!s.graph.contains(u) || !s.graph.contains(v)) {
    throw UpdateRejected(std::string(what) + ": unknown vertex");
  }
  if (u == v) throw UpdateRejected(std::string(what) + ": self-loop");
}

}  // namespace

bool clique_grows(const ColoringState& s, VertexId u, VertexId v) {
  const Graph& g = s.graph;
  Bitset common = g.slot_neighbors(g.slot_of(u)) & g.slot_neighbors(g.slot_of(v));
  return clique_of_size(g, common, s.color_count - 1);
}

std::optional<std::size_t> order_record_for(const SolutionOrder& order, VertexId u, VertexId v) {
  auto single = [](const std::vector<VertexId>& side, VertexId w) {
    return side.size() == 1 && side.front() == w;
  };
  auto holds = [](const std::vector<VertexId>& side, VertexId w) {
    return std::binary_search(side.begin(), side.end(), w);
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& r = order.records[i];
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      if ((single(r.x_members, a) && holds(r.y_members, b)) ||
          (single(r.y_members, a) && holds(r.x_members, b))) {
        return i;
      }
    }
  }
  return std::nullopt;
}

namespace {

constexpr int kLookahead = 1;

struct RepairRun {
  Graph graph;
  std::vector<PairKey> pending;
  std::vector<ContractionRecord> records;
  bool widened = false;
};

void contract_in(RepairRun& run, VertexId x, VertexId y) {
  ContractionRecord r{x, y, {}, run.graph.provenance(x), run.graph.provenance(y)};
  r.z = run.graph.merge(x, y);
  run.records.push_back(std::move(r));
}

// Contract every pending old record that is still a two-pair, earliest first,
// until none applies.
void replay_pending(RepairRun& run) {
  for (bool applied = true; applied;) {
    applied = false;
    for (std::size_t i = 0; i < run.pending.size(); ++i) {
      auto x = holder_exact(run.graph, run.pending[i].first);
      auto y = holder_exact(run.graph, run.pending[i].second);
      if (x && y && is_two_pair(run.graph, *x, *y)) {
        contract_in(run, *x, *y);
        run.pending.erase(run.pending.begin() + static_cast<std::ptrdiff_t>(i));
        applied = true;
        break;
      }
    }
  }
}

// Two-pairs with an endpoint holding an affected original or adjacent to
// such a vertex; all two-pairs when there are none nearby.
std::vector<TwoPair> candidate_pairs(const Graph& j, const Bitset& aff, bool& widened) {
  Bitset near(j.slot_count());
  for_each_bit(j.live_slots(), [&](std::size_t s) {
    if (j.provenance_bits(j.slot_id(s)).intersects(aff)) near.set(s);
  });
  Bitset local = near;
  for_each_bit(local, [&](std::size_t s) { near |= j.slot_neighbors(s); });

  auto vs = j.vertices();
  std::vector<TwoPair> out;
  for (int pass = 0; pass < 2 && out.empty(); ++pass) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
      auto sa = j.slot_of(vs[a]);
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        auto sb = j.slot_of(vs[b]);
        if (pass == 0 && !near.test(sa) && !near.test(sb)) continue;
        if (detail::two_pair_slots(j, sa, sb)) out.push_back({vs[a], vs[b]});
      }
    }
    if (pass == 1 && !out.empty()) widened = true;
  }
  return out;
}

std::size_t churn(const std::vector<ContractionRecord>& records, const std::set<PairKey>& old_keys,
                  std::size_t n) {
  std::size_t kept = 0;
  for (const auto& r : records) kept += old_keys.contains(key_of(r, n)) ? 1 : 0;
  return (old_keys.size() - kept) + (records.size() - kept);
}

// Finish the run. At every choice each candidate is tried with a completion
// one level shallower, and the one changing the fewest records is kept;
// depth 0 takes the first candidate.
void complete(RepairRun& run, const Bitset& aff, const std::set<PairKey>& old_keys, int depth) {
  const std::size_t n = aff.size();
  for (;;) {
    replay_pending(run);
    if (run.graph.is_complete()) return;
    auto cands = candidate_pairs(run.graph, aff, run.widened);
    if (cands.empty()) {
      throw NotWeaklyChordal("repair_affected: non-complete graph without a two-pair");
    }
    std::size_t best = 0;
    if (depth > 0 && cands.size() > 1) {
      std::size_t best_cost = npos;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        RepairRun trial = run;
        contract_in(trial, cands[c].x, cands[c].y);
        try {
          complete(trial, aff, old_keys, depth - 1);
        } catch (const NotWeaklyChordal&) {
          continue;
        }
        auto cost = churn(trial.records, old_keys, n);
        if (cost < best_cost) {
          best_cost = cost;
          best = c;
        }
      }
    }
    contract_in(run, cands[best].x, cands[best].y);
  }
}

}  // namespace

RepairResult repair_affected(const Graph& h, const SolutionOrder& old,
                             std::span<const VertexId> affected) {
  const std::size_t n = h.original_bound();
  Bitset aff(n);
  for (auto v : affected) aff.set(v.value);

  RepairRun run{h, {}, {}, false};
  std::set<PairKey> old_keys;
  for (const auto& r : old.records) {
    if (r.x_members.empty() || r.y_members.empty()) {
      throw GraphError("repair_affected: old order lacks provenance");
    }
    run.pending.emplace_back(to_bits(r.x_members, n), to_bits(r.y_members, n));
    old_keys.insert(key_of(r, n));
  }

  complete(run, aff, old_keys, kLookahead);

  RepairResult out;
  out.final_graph = std::move(run.graph);
  out.order.records = std::move(run.records);
  out.widened = run.widened;
  std::set<PairKey> new_keys;
  for (const auto& r : out.order.records) new_keys.insert(key_of(r, n));
  for (const auto& r : old.records) {
    if (!new_keys.contains(key_of(r, n))) out.removed.push_back(r);
  }
  for (const auto& r : out.order.records) {
    if (!old_keys.contains(key_of(r, n))) out.added.push_back(r);
  }
  return out;
}

std::pair<ColoringState, UpdateReport> insert_update(const ColoringState& s, VertexId u,
                                                     VertexId v, const DynamicOptions& opts) {
  check_endpoints(s, u, v, "insert");
  if (s.graph.adjacent(u, v)) {
    throw UpdateRejected("insert: edge (" + to_string(u) + "," + to_string(v) +
                         ") already present");
  }
  if (opts.verify && !insertion_keeps_weakly_chordal(s.graph, u, v)) {
    throw UpdateRejected("insert: (" + to_string(u) + "," + to_string(v) +
                         ") would create a hole or antihole");
  }
  Graph h = insert_edge(s.graph, u, v);

  UpdateReport rep;
  rep.kind = EventKind::insert;
  rep.u = u;
  rep.v = v;
  rep.colors_before = s.color_count;
  rep.omega_before = static_cast<int>(s.clique.size());

  const bool in_order = order_record_for(s.order, u, v).has_value();
  const bool grows = clique_grows(s, u, v);
  const bool same = s.coloring.at(u) == s.coloring.at(v);
  if (in_order) {
    rep.case_label = grows ? UpdateCase::I32 : UpdateCase::I31;
  } else if (!same) {
    rep.case_label = UpdateCase::I1;
  } else {
    rep.case_label = grows ? UpdateCase::I22 : UpdateCase::I21;
  }

  ColoringState out;
  std::array<VertexId, 2> ends{u, v};
  RepairResult repair;
  try {
    repair = repair_affected(h, s.order, ends);
  } catch (const NotWeaklyChordal& e) {
    fill_fallback(s, h, e.what(), out, rep);
    return {std::move(out), std::move(rep)};
  }
  rep.pairs_removed = repair.removed;
  rep.pairs_added = repair.added;
  rep.search_widened = repair.widened;

  const int target = s.color_count + (grows ? 1 : 0);
  auto lifted = lift(h, Replay{repair.final_graph, repair.order});
  if (lifted.color_count != target || (grows && !same)) {
    fill_fallback(s, h, "repaired order disagrees with the clique-growth test", out, rep);
    return {std::move(out), std::move(rep)};
  }

  std::map<VertexId, Color> f;
  if (!same) {
    f = s.coloring;
  } else if (grows) {
    f = s.coloring;
    f[u] = target;
  } else {
    f = separate_endpoints(s.graph, h, s.coloring, u, v, target, lifted.coloring);
  }

  out = ColoringState{std::move(h), std::move(f), target, std::move(lifted.clique),
                      std::move(repair.order)};
  rep.colors_after = out.color_count;
  rep.omega_after = static_cast<int>(out.clique.size());
  rep.recolored = changed_vertices(s.coloring, out.coloring);

  if (out.coloring.at(u) == out.coloring.at(v) || (opts.verify && !verify_state(out))) {
    Graph g2 = out.graph;
    fill_fallback(s, g2, "maintained state failed verification", out, rep);
  }
  return {std::move(out), std::move(rep)};
}

std::pair<ColoringState, UpdateReport> delete_update(const ColoringState& s, VertexId u,
                                                     VertexId v, const DynamicOptions& opts) {
  check_endpoints(s, u, v, "delete");
  if (!s.graph.adjacent(u, v)) {
    throw UpdateRejected("delete: edge (" + to_string(u) + "," + to_string(v) + ") absent");
  }
  if (opts.verify && !deletion_keeps_weakly_chordal(s.graph, u, v)) {
    throw UpdateRejected("delete: (" + to_string(u) + "," + to_string(v) +
                         ") would create a hole or antihole");
  }
  Graph g = delete_edge(s.graph, u, v);

  UpdateReport rep;
  rep.kind = EventKind::remove;
  rep.u = u;
  rep.v = v;
  rep.colors_before = s.color_count;
  rep.omega_before = static_cast<int>(s.clique.size());

  ColoringState out;
  std::array<VertexId, 2> ends{u, v};
  RepairResult repair;
  try {
    repair = repair_affected(g, s.order, ends);
  } catch (const NotWeaklyChordal& e) {
    rep.case_label = UpdateCase::D1;
    fill_fallback(s, g, e.what(), out, rep);
    return {std::move(out), std::move(rep)};
  }
  rep.pairs_removed = repair.removed;
  rep.pairs_added = repair.added;
  rep.search_widened = repair.widened;

  auto lifted = lift(g, Replay{repair.final_graph, repair.order});
  std::map<VertexId, Color> f;
  if (lifted.color_count == s.color_count) {
    rep.case_label = UpdateCase::D1;
    f = s.coloring;
  } else if (lifted.color_count == s.color_count - 1) {
    rep.case_label = UpdateCase::D2;
    f = best_relabel(lifted.coloring, s.coloring, lifted.color_count);
  } else {
    rep.case_label = UpdateCase::D1;
    fill_fallback(s, g, "clique number changed by more than one", out, rep);
    return {std::move(out), std::move(rep)};
  }

  int count = lifted.color_count;
  out = ColoringState{std::move(g), std::move(f), count, std::move(lifted.clique),
                      std::move(repair.order)};
  rep.colors_after = out.color_count;
  rep.omega_after = static_cast<int>(out.clique.size());
  rep.recolored = changed_vertices(s.coloring, out.coloring);

  if (opts.verify && (!proper(out.graph, out.coloring) || !verify_state(out))) {
    Graph g2 = out.graph;
    fill_fallback(s, g2, "maintained state failed verification", out, rep);
  }
  return {std::move(out), std::move(rep)};
}

}  // namespace timcolor
