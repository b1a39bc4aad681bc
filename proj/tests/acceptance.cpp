// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "timcolor/dynamic_coloring.hpp"
#include "timcolor/generators.hpp"
#include "timcolor/oracles.hpp"
#include "timcolor/patterns.hpp"
#include "timcolor/recognition.hpp"
#include "timcolor/simulation.hpp"
#include "timcolor/static_coloring.hpp"
#include "timcolor/tim.hpp"

using namespace timcolor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

const double kStreamDensities[] = {0.3, 1.0, 2.5};

void run(const char* id, const char* title, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %s %s: %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
  failures += o.pass ? 0 : 1;
}

std::string num(long v) { return std::to_string(v); }

Graph conflict_of(const TopologyGraph& t) {
  return build_conflict_graph(t, all_unicast_messages(t)).graph;
}

// Weakly chordal test graphs with n <= 12, half from the rejection
// generator and half from small chordal-bipartite topologies.
std::vector<Graph> small_weakly_chordal(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  const double densities[] = {0.2, 0.4, 0.6, 0.9};
  while (out.size() < count / 2) {
    std::size_t n = 4 + out.size() % 9;
    out.push_back(random_weakly_chordal(n, densities[out.size() % 4], rng));
  }
  while (out.size() < count) {
    int m = 2 + static_cast<int>(out.size() % 3);
    int k = 2 + static_cast<int>((out.size() / 3) % 3);
    auto g = conflict_of(random_chordal_bipartite(m, k, densities[out.size() % 4], rng));
    if (g.vertex_count() <= 12) out.push_back(std::move(g));
  }
  return out;
}

using ClassPair = std::set<std::vector<VertexId>>;

std::set<ClassPair> classes(const std::vector<ContractionRecord>& rs) {
  std::set<ClassPair> out;
  for (const auto& r : rs) out.insert({r.x_members, r.y_members});
  return out;
}

std::set<std::vector<VertexId>> final_classes(const ColoringState& s) {
  auto replay = replay_order(s.graph, s.order);
  std::set<std::vector<VertexId>> out;
  for (auto v : replay.final_graph.vertices()) out.insert(replay.final_graph.provenance(v));
  return out;
}

Outcome perfection() {
  auto graphs = small_weakly_chordal(500, 101);
  long bad = 0;
  std::string first;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const auto& g = graphs[k];
    int ours = static_color(g).color_count;
    int chi = oracle_chromatic(g);
    auto omega = static_cast<int>(oracle_max_clique(g).size());
    if (ours != chi || chi != omega) {
      if (first.empty()) {
        first = "; graph " + num(static_cast<long>(k)) + " static " + num(ours) + " chi " +
                num(chi) + " omega " + num(omega);
      }
      ++bad;
    }
  }
  return {bad == 0, num(static_cast<long>(graphs.size())) + " graphs, " + num(bad) +
                        " mismatches" + first};
}

Outcome dynamic_equivalence() {
  long seeds = 0, events = 0, checks = 0, passed = 0, fallbacks = 0;
  std::size_t largest = 0;
  std::string failure;
  for (std::uint64_t seed = 2000; seeds < 60; ++seed) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.generator = {4 + static_cast<int>(seed % 7), 4 + static_cast<int>((seed / 7) % 7),
                     kStreamDensities[seed % 3]};
    cfg.event_count = 200;
    cfg.verification = Verification::full;
    Rng probe(cfg.seed);
    if (build_workload(cfg, probe).graph.vertex_count() > 60) continue;
    auto r = run_simulation(cfg);
    ++seeds;
    events += r.summary.events;
    checks += r.summary.equivalence_checks;
    passed += r.summary.equivalence_passed;
    fallbacks += r.summary.fallbacks;
    largest = std::max(largest, r.summary.vertices);
    if (r.status == TrialStatus::assertion_failed && failure.empty()) {
      failure = "; seed " + std::to_string(seed) + ": " + r.failure;
    }
  }
  bool ok = failure.empty() && seeds >= 50 && events >= 10000 && checks == events &&
            passed == checks && fallbacks == 0;
  return {ok, num(events) + " events over " + num(seeds) + " seeds (n <= " +
                  num(static_cast<long>(largest)) + "), " + num(passed) + "/" + num(checks) +
                  " static comparisons equal, " + num(fallbacks) + " fallbacks" + failure};
}

Outcome locality() {
  struct Bucket {
    long insertions = 0;
    std::size_t max_recolored = 0;
    std::size_t max_pairs = 0;
  };
  std::map<std::size_t, Bucket> table;
  long insertions = 0, over = 0;
  std::string failure;
  const double densities[] = {0.0, 0.3, 0.8, 2.0};
  for (std::uint64_t seed = 3000; seed < 3400; ++seed) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.generator = {4 + static_cast<int>(seed % 7), 4 + static_cast<int>((seed / 7) % 7),
                     densities[(seed / 49) % 4]};
    cfg.mode = EventMode::independent;
    cfg.insert_fraction = 1.0;
    cfg.event_count = 15;
    cfg.verification = Verification::full;
    cfg.bound = 8;
    auto r = run_simulation(cfg);
    if (r.status == TrialStatus::assertion_failed && failure.empty()) {
      failure = "; seed " + std::to_string(seed) + ": " + r.failure;
    }
    auto& b = table[r.summary.vertices / 10 * 10];
    for (const auto& e : r.events) {
      if (e.report.kind != EventKind::insert) continue;
      auto pairs = e.report.pairs_removed.size() + e.report.pairs_added.size();
      ++insertions;
      ++b.insertions;
      b.max_recolored = std::max(b.max_recolored, e.report.recolored.size());
      b.max_pairs = std::max(b.max_pairs, pairs);
      over += (pairs > cfg.bound || e.report.recolored.size() > cfg.bound) ? 1 : 0;
    }
  }
  std::printf("AC3 table: n-range insertions max|recolored| max|pairs changed|\n");
  std::size_t low = 0, high = 0;
  for (auto& [lo, b] : table) {
    if (b.insertions == 0) continue;
    std::printf("AC3 table: %zu-%zu %ld %zu %zu\n", lo, lo + 9, b.insertions, b.max_recolored,
                b.max_pairs);
    auto m = std::max(b.max_recolored, b.max_pairs);
    (lo < 40 ? low : high) = std::max(lo < 40 ? low : high, m);
  }
  const bool spans = table.begin()->first <= 10 && table.rbegin()->first >= 50;
  const bool flat = high <= low;
  bool ok = failure.empty() && over == 0 && insertions >= 5000 && spans && flat;
  return {ok, num(over) + " of " + num(insertions) +
                  " insertions over the bound 8; max below n=40 is " + num(static_cast<long>(low)) +
                  ", from n=40 on " + num(static_cast<long>(high)) + failure};
}

// Locality after a stream of events has moved the graph away from a
// conflict graph. Reported only.
void stream_note() {
  long insertions = 0, over = 0;
  std::size_t worst = 0;
  for (std::uint64_t seed = 2000; seed < 2060; ++seed) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.generator = {4 + static_cast<int>(seed % 7), 4 + static_cast<int>((seed / 7) % 7),
                     kStreamDensities[seed % 3]};
    cfg.event_count = 200;
    cfg.verification = Verification::off;
    Rng probe(cfg.seed);
    if (build_workload(cfg, probe).graph.vertex_count() > 60) continue;
    auto r = run_simulation(cfg);
    insertions += r.summary.insertions;
    over += r.summary.bound_exceeded;
    worst = std::max({worst, r.summary.max_pairs_changed_insert, r.summary.max_recolored_insert});
  }
  std::printf("AC3 note: in event streams %ld of %ld insertions exceed 8 (worst %zu); "
              "these graphs are no longer conflict graphs\n",
              over, insertions, worst);
}

Outcome figures() {
  std::vector<std::string> bad;
  auto check = [&](bool cond, const char* what) {
    if (!cond) bad.emplace_back(what);
  };

  auto fig6 = static_color(load_fixture_graph("fig6.json"));
  check(fig6.color_count == 3, "fig6 colors");
  check(classes(fig6.order.records) == std::set<ClassPair>{{{P(2)}, {P(5)}},
                                                          {{P(1)}, {P(4)}},
                                                          {{P(3)}, {P(6)}}},
        "fig6 order");
  check(final_classes(fig6) ==
            std::set<std::vector<VertexId>>{{P(1), P(4)}, {P(2), P(5)}, {P(3), P(6)}},
        "fig6 clique classes");

  auto [fig7, r7] = insert_update(fig6, P(2), P(5), {.verify = true});
  check(r7.case_label == UpdateCase::I31, "fig7 case");
  check(classes(r7.pairs_added) == std::set<ClassPair>{{{P(2)}, {P(4)}}, {{P(1)}, {P(5)}}},
        "fig7 added pairs");
  check(classes(r7.pairs_removed) == std::set<ClassPair>{{{P(2)}, {P(5)}}, {{P(1)}, {P(4)}}},
        "fig7 removed pairs");
  check(r7.colors_after == 3 && verify_state(fig7).ok, "fig7 colors");

  SolutionOrder o9;
  // (v2,v3), (v5,v6), (v23,v56), (v4,v7)
  for (auto [x, y, z] : {std::array<std::uint32_t, 3>{1, 2, 7}, {4, 5, 8}, {7, 8, 9}, {3, 6, 10}}) {
    o9.records.push_back({VertexId(x), VertexId(y), VertexId(z), {}, {}});
  }
  auto fig9 = state_from_order(load_fixture_graph("fig9.json"), o9);
  auto [g9, r9] = delete_update(fig9, P(1), P(4), {.verify = true});
  check(r9.case_label == UpdateCase::D2, "fig9 case");
  check(classes(r9.pairs_added) == std::set<ClassPair>{{{P(1)}, {P(4), P(7)}}},
        "fig9 extra pair");
  check(r9.colors_before == 3 && r9.colors_after == 2 && verify_state(g9).ok, "fig9 colors");

  auto fig8 = static_color(load_fixture_graph("fig8.json"));
  auto [h8, r8] = insert_update(fig8, P(1), P(4), {.verify = true});
  check(r8.case_label == UpdateCase::I32, "fig8 case");
  check(r8.colors_after == r8.colors_before + 1 && verify_state(h8).ok, "fig8 colors");

  std::string detail = "Fig 6 static, Fig 6->7 I-3-1, Fig 9 D-2, Fig 8 I-3-2";
  for (const auto& b : bad) detail += "; mismatch: " + b;
  return {bad.empty(), detail};
}

Outcome square_of_line_graph() {
  Rng rng(505);
  long topologies = 0, bad = 0;
  const double ps[] = {0.2, 0.4, 0.6, 0.8};
  for (; topologies < 250; ++topologies) {
    int m = 2 + static_cast<int>(topologies % 7);
    int n = 2 + static_cast<int>((topologies / 7) % 7);
    auto t = random_bipartite(m, n, ps[topologies % 4], rng);
    auto msgs = all_unicast_messages(t);
    auto cg = build_conflict_graph(t, msgs).graph;
    auto lg = line_graph(t.bipartite_graph());
    auto sq = square(lg.graph);
    // Label each line-graph vertex with its message.
    std::map<std::pair<int, int>, std::uint32_t> at;
    for (std::uint32_t k = 0; k < lg.source_edges.size(); ++k) {
      auto [s, d] = lg.source_edges[k];
      at[{static_cast<int>(s.value), static_cast<int>(d.value) - m}] = k;
    }
    bool same = sq.vertex_count() == cg.vertex_count() && at.size() == msgs.size();
    for (std::uint32_t a = 0; same && a < msgs.size(); ++a) {
      for (std::uint32_t b = a + 1; same && b < msgs.size(); ++b) {
        auto la = at.at({msgs[a].source, msgs[a].destination});
        auto lb = at.at({msgs[b].source, msgs[b].destination});
        same = cg.adjacent(VertexId(a), VertexId(b)) == sq.adjacent(VertexId(la), VertexId(lb));
      }
    }
    bad += same ? 0 : 1;
  }
  return {bad == 0, num(topologies) + " random bipartite topologies, " + num(bad) +
                        " differ from the square of the line graph"};
}

Outcome closure() {
  Rng rng(606);
  auto lib = builtin_forbidden_patterns();
  long topologies = 0, not_wc = 0, hits = 0;
  std::map<std::string, long> by_pattern;
  std::size_t largest = 0;
  const double densities[] = {0.0, 0.3, 0.8, 2.0};
  for (; topologies < 220; ++topologies) {
    int m = 2 + static_cast<int>(topologies % 7);
    int n = 2 + static_cast<int>((topologies / 7) % 7);
    auto t = random_chordal_bipartite(m, n, densities[topologies % 4], rng);
    auto g = conflict_of(t);
    largest = std::max(largest, g.vertex_count());
    not_wc += is_weakly_chordal(g) ? 0 : 1;
    auto found = scan_forbidden(g, lib);
    hits += found.empty() ? 0 : 1;
    std::set<std::string> names;
    for (const auto& e : found) names.insert(e.pattern);
    for (const auto& name : names) ++by_pattern[name];
  }
  std::string names;
  for (const auto& p : lib.patterns()) names += (names.empty() ? "" : ", ") + p.name;
  std::string breakdown;
  for (const auto& [name, count] : by_pattern) {
    breakdown += (breakdown.empty() ? " (" : ", ") + name + " in " + num(count);
  }
  if (!breakdown.empty()) breakdown += ")";
  std::printf("AC6 coverage: library {%s}; the three figure-only patterns H1-H3 have no "
              "transcribable adjacency and are not scanned\n",
              names.c_str());
  return {not_wc == 0 && hits == 0,
          num(topologies) + " chordal-bipartite topologies (conflict graphs up to " +
              num(static_cast<long>(largest)) + " vertices), " + num(not_wc) +
              " not weakly chordal, " + num(hits) + " with forbidden patterns" + breakdown};
}

Outcome order_independence() {
  auto graphs = small_weakly_chordal(120, 707);
  long bad = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    int base = static_color(graphs[k]).color_count;
    for (std::uint64_t r = 0; r < 10; ++r) {
      StaticOptions opts;
      opts.verify = true;
      opts.selector = random_pair_selector(k * 100 + r);
      auto s = static_color(graphs[k], opts);
      if (s.color_count != base || !verify_state(s).ok) ++bad;
    }
  }
  return {bad == 0, num(static_cast<long>(graphs.size())) + " graphs x 10 random orders, " +
                        num(bad) + " disagreements"};
}

}  // namespace

int main() {
  run("AC1", "perfection equality", perfection);
  run("AC2", "dynamic equals static", dynamic_equivalence);
  run("AC3", "bounded locality", locality);
  stream_note();
  run("AC4", "figure replays", figures);
  run("AC5", "conflict graph is the square of the line graph", square_of_line_graph);
  run("AC6", "closure properties", closure);
  run("AC7", "order independence", order_independence);
  return failures == 0 ? 0 : 1;
}
