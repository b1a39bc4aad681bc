#include "timcolor/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "timcolor/graph_io.hpp"
#include "timcolor/oracles.hpp"
#include "timcolor/recognition.hpp"

namespace timcolor {

std::size_t default_rejection_cap(const Graph& g) {
  return 50 * g.vertex_count() * g.vertex_count();
}

namespace {

std::optional<PerturbationEvent> try_kind(const Graph& g, Rng& rng, EventKind kind,
                                          std::size_t cap) {
  std::vector<Edge> candidates;
  if (kind == EventKind::insert) {
    auto vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (!g.adjacent(vs[a], vs[b])) candidates.emplace_back(vs[a], vs[b]);
      }
    }
  } else {
    candidates = g.edges();
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (candidates.size() > cap) candidates.resize(cap);
  for (auto [u, v] : candidates) {
    bool ok = kind == EventKind::insert ? insertion_keeps_weakly_chordal(g, u, v)
                                        : deletion_keeps_weakly_chordal(g, u, v);
    if (ok) return PerturbationEvent{kind, u, v, 0};
  }
  return std::nullopt;
}

}  // namespace

std::optional<PerturbationEvent> gen_event(const Graph& g, Rng& rng, double insert_fraction,
                                           std::size_t cap) {
  if (cap == 0) cap = default_rejection_cap(g);
  std::bernoulli_distribution coin(insert_fraction);
  EventKind first = coin(rng) ? EventKind::insert : EventKind::remove;
  EventKind second = first == EventKind::insert ? EventKind::remove : EventKind::insert;
  if (auto e = try_kind(g, rng, first, cap)) return e;
  if (insert_fraction <= 0.0 || insert_fraction >= 1.0) return std::nullopt;
  return try_kind(g, rng, second, cap);
}

std::string to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::ok: return "ok";
    case TrialStatus::saturated: return "saturated";
    case TrialStatus::assertion_failed: return "assertion_failed";
  }
  return "?";
}

namespace {

Verification parse_verification(const std::string& s) {
  if (s == "off") return Verification::off;
  if (s == "spot") return Verification::spot;
  if (s == "full") return Verification::full;
  throw GraphError("config: verification must be off, spot or full");
}

const char* verification_name(Verification v) {
  switch (v) {
    case Verification::off: return "off";
    case Verification::spot: return "spot";
    case Verification::full: return "full";
  }
  return "?";
}

EventMode parse_mode(const std::string& s) {
  if (s == "stream") return EventMode::stream;
  if (s == "independent") return EventMode::independent;
  throw GraphError("config: mode must be stream or independent");
}

const char* mode_name(EventMode m) { return m == EventMode::stream ? "stream" : "independent"; }

std::string resolve(const std::string& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute() || base.empty()) return p;
  return (std::filesystem::path(base) / path).string();
}

}  // namespace

TrialConfig trial_config_from_json(const Json& doc, const std::string& base_dir) {
  if (!doc.is_object()) throw GraphError("config: expected a JSON object");
  TrialConfig cfg;
  try {
    cfg.seed = doc.value("seed", cfg.seed);
    if (doc.contains("topology")) cfg.topology = resolve(base_dir, doc["topology"].get<std::string>());
    if (doc.contains("graph")) cfg.graph = resolve(base_dir, doc["graph"].get<std::string>());
    if (cfg.topology && cfg.graph) throw GraphError("config: give either topology or graph");
    if (doc.contains("generator")) {
      const auto& gen = doc["generator"];
      cfg.generator.sources = gen.value("M", cfg.generator.sources);
      cfg.generator.destinations = gen.value("N", cfg.generator.destinations);
      cfg.generator.density = gen.value("density", cfg.generator.density);
    }
    cfg.event_count = doc.value("event_count", cfg.event_count);
    cfg.insert_fraction = doc.value("insert_fraction", cfg.insert_fraction);
    cfg.oracle_cap = doc.value("oracle_cap", cfg.oracle_cap);
    cfg.bound = doc.value("bound", cfg.bound);
    cfg.verification =
        parse_verification(doc.value("verification", std::string(verification_name(cfg.verification))));
    cfg.spot_every = doc.value("spot_every", cfg.spot_every);
    if (doc.contains("events")) {
      for (const auto& e : doc["events"]) {
        if (!e.is_array() || e.size() != 3) throw GraphError("config: malformed event " + e.dump());
        auto kind = e[0].get<std::string>();
        if (kind != "insert" && kind != "delete") {
          throw GraphError("config: event kind must be insert or delete");
        }
        cfg.script.push_back({kind == "insert" ? EventKind::insert : EventKind::remove,
                              VertexId(e[1].get<std::uint32_t>()),
                              VertexId(e[2].get<std::uint32_t>()),
                              static_cast<long>(cfg.script.size())});
      }
    }
    cfg.mode = parse_mode(doc.value("mode", std::string(mode_name(cfg.mode))));
    cfg.timing = doc.value("timing", cfg.timing);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("config: ") + e.what());
  }
  if (cfg.event_count < 0) throw GraphError("config: event_count must be non-negative");
  if (cfg.insert_fraction < 0 || cfg.insert_fraction > 1) {
    throw GraphError("config: insert_fraction must lie in [0,1]");
  }
  if (cfg.spot_every < 1) throw GraphError("config: spot_every must be positive");
  return cfg;
}

TrialConfig load_trial_config(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(path + ": " + e.what());
  }
  return trial_config_from_json(doc, std::filesystem::path(path).parent_path().string());
}

Json trial_config_to_json(const TrialConfig& cfg) {
  Json doc;
  doc["seed"] = cfg.seed;
  if (cfg.topology) doc["topology"] = *cfg.topology;
  if (cfg.graph) doc["graph"] = *cfg.graph;
  if (!cfg.topology && !cfg.graph) {
    doc["generator"] = {{"M", cfg.generator.sources},
                        {"N", cfg.generator.destinations},
                        {"density", cfg.generator.density}};
  }
  doc["event_count"] = cfg.event_count;
  doc["insert_fraction"] = cfg.insert_fraction;
  doc["oracle_cap"] = cfg.oracle_cap;
  doc["bound"] = cfg.bound;
  doc["verification"] = verification_name(cfg.verification);
  doc["spot_every"] = cfg.spot_every;
  doc["mode"] = mode_name(cfg.mode);
  if (!cfg.script.empty()) {
    doc["events"] = Json::array();
    for (const auto& e : cfg.script) doc["events"].push_back({to_string(e.kind), e.u.value, e.v.value});
  }
  doc["timing"] = cfg.timing;
  return doc;
}

Workload build_workload(const TrialConfig& cfg, Rng& rng) {
  if (cfg.graph) return {load_graph_file(*cfg.graph).graph, false};
  if (cfg.topology) {
    auto file = load_topology_file(*cfg.topology);
    auto msgs = file.messages ? *file.messages : all_unicast_messages(file.topology);
    return {build_conflict_graph(file.topology, msgs).graph, true};
  }
  auto t = random_chordal_bipartite(cfg.generator.sources, cfg.generator.destinations,
                                    cfg.generator.density, rng);
  return {build_conflict_graph(t, all_unicast_messages(t)).graph, true};
}

namespace {

std::string event_name(const PerturbationEvent& e) {
  return to_string(e.kind) + " (" + to_string(e.u) + "," + to_string(e.v) + ") at seq " +
         std::to_string(e.seq);
}

}  // namespace

TrialReport run_simulation(const TrialConfig& cfg) {
  Rng rng(cfg.seed);
  auto wl = build_workload(cfg, rng);
  TrialReport rep;
  auto& sum = rep.summary;
  sum.vertices = wl.graph.vertex_count();
  sum.conflict_workload = wl.conflict_graph;

  auto fail = [&](std::string msg) {
    rep.status = TrialStatus::assertion_failed;
    rep.failure = std::move(msg);
  };

  if (cfg.verification != Verification::off && !is_weakly_chordal(wl.graph)) {
    fail("initial graph is not weakly chordal");
    rep.final_state.graph = wl.graph;
    return rep;
  }
  const ColoringState initial = static_color(wl.graph);
  ColoringState state = initial;
  sum.initial_colors = state.color_count;
  bool pristine = true;

  std::size_t recolored_total = 0;
  const bool scripted = !cfg.script.empty();
  const long total = scripted ? static_cast<long>(cfg.script.size()) : cfg.event_count;
  for (long seq = 0; seq < total; ++seq) {
    if (cfg.mode == EventMode::independent && seq > 0) {
      state = initial;
      pristine = true;
    }
    auto ev = scripted ? std::optional(cfg.script[static_cast<std::size_t>(seq)])
                       : gen_event(state.graph, rng, cfg.insert_fraction);
    if (!ev) {
      rep.status = TrialStatus::saturated;
      break;
    }
    ev->seq = seq;

    auto t0 = std::chrono::steady_clock::now();
    const DynamicOptions opts{scripted};
    auto [next, update] = ev->kind == EventKind::insert
                              ? insert_update(state, ev->u, ev->v, opts)
                              : delete_update(state, ev->u, ev->v, opts);
    auto t1 = std::chrono::steady_clock::now();
    long wall =
        cfg.timing ? static_cast<long>(
                         std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count())
                   : 0;

    ++sum.events;
    (ev->kind == EventKind::insert ? sum.insertions : sum.deletions) += 1;
    const std::size_t pairs = update.pairs_removed.size() + update.pairs_added.size();
    sum.max_recolored = std::max(sum.max_recolored, update.recolored.size());
    sum.max_pairs_changed = std::max(sum.max_pairs_changed, pairs);
    if (ev->kind == EventKind::insert) {
      sum.max_recolored_insert = std::max(sum.max_recolored_insert, update.recolored.size());
      sum.max_pairs_changed_insert = std::max(sum.max_pairs_changed_insert, pairs);
    }
    const bool over = ev->kind == EventKind::insert &&
                      (update.recolored.size() > cfg.bound || pairs > cfg.bound);
    const bool bounded = wl.conflict_graph && pristine && ev->kind == EventKind::insert;
    sum.bound_exceeded += over ? 1 : 0;
    sum.bound_checks += bounded ? 1 : 0;
    pristine = false;
    recolored_total += update.recolored.size();
    sum.fallbacks += update.fallback_used ? 1 : 0;
    sum.widened_searches += update.search_widened ? 1 : 0;
    ++sum.cases[to_string(update.case_label)];
    sum.wall_us_total += wall;
    sum.wall_us_max = std::max(sum.wall_us_max, wall);
    rep.events.push_back({seq, update, wall});
    state = std::move(next);

    auto vr = verify_state(state);
    if (!vr) {
      fail("verify_state failed after " + event_name(*ev) + ": " + vr.diagnostics.front());
    }

    const bool check = cfg.verification == Verification::full ||
                       (cfg.verification == Verification::spot && seq % cfg.spot_every == 0);
    if (rep.status == TrialStatus::ok && check) {
      if (!is_weakly_chordal(state.graph)) {
        fail("generator produced a graph that is not weakly chordal at " + event_name(*ev));
      }
      ++sum.equivalence_checks;
      auto fresh = static_color(state.graph);
      if (fresh.color_count == state.color_count) {
        ++sum.equivalence_passed;
      } else {
        fail("dynamic color count " + std::to_string(state.color_count) +
             " differs from static " + std::to_string(fresh.color_count) + " after " +
             event_name(*ev));
      }
      if (state.graph.vertex_count() <= cfg.oracle_cap) {
        ++sum.oracle_checks;
        int chi = oracle_chromatic(state.graph, cfg.oracle_cap);
        auto omega = oracle_max_clique(state.graph, cfg.oracle_cap);
        if (chi == state.color_count && static_cast<int>(omega.size()) == chi) {
          ++sum.oracle_passed;
        } else {
          fail("oracle disagreement after " + event_name(*ev) + ": chi " + std::to_string(chi) +
               ", omega " + std::to_string(omega.size()) + ", colors " +
               std::to_string(state.color_count));
        }
      }
    }
    if (rep.status == TrialStatus::ok && wl.conflict_graph) {
      if (update.fallback_used) {
        fail("fallback used on a conflict-graph workload at " + event_name(*ev) + ": " +
             update.fallback_reason);
      } else if (bounded && over) {
        fail("bound " + std::to_string(cfg.bound) + " exceeded at " + event_name(*ev) +
             ": recolored " + std::to_string(update.recolored.size()) + ", pairs changed " +
             std::to_string(pairs));
      }
    }
    if (rep.status == TrialStatus::assertion_failed) {
      rep.failing_event = *ev;
      break;
    }
  }
  sum.mean_recolored =
      sum.events ? static_cast<double>(recolored_total) / static_cast<double>(sum.events) : 0.0;
  rep.final_state = std::move(state);
  return rep;
}

const char* csv_header() {
  return "seq,kind,u,v,case,recolored,pairs_removed,pairs_added,colors_before,colors_after,"
         "omega_before,omega_after,fallback,wall_us";
}

std::string csv_row(const EventRecord& e) {
  const auto& r = e.report;
  std::ostringstream os;
  os << e.seq << ',' << to_string(r.kind) << ',' << r.u.value << ',' << r.v.value << ','
     << to_string(r.case_label) << ',' << r.recolored.size() << ',' << r.pairs_removed.size()
     << ',' << r.pairs_added.size() << ',' << r.colors_before << ',' << r.colors_after << ','
     << r.omega_before << ',' << r.omega_after << ',' << (r.fallback_used ? 1 : 0) << ','
     << e.wall_us;
  return os.str();
}

Json trial_report_to_json(const TrialConfig& cfg, const TrialReport& r) {
  const auto& s = r.summary;
  Json doc;
  doc["config"] = trial_config_to_json(cfg);
  doc["status"] = to_string(r.status);
  if (r.status == TrialStatus::assertion_failed) {
    doc["failure"] = r.failure;
    if (r.failing_event) {
      doc["failing_event"] = {{"seq", r.failing_event->seq},
                              {"kind", to_string(r.failing_event->kind)},
                              {"u", r.failing_event->u.value},
                              {"v", r.failing_event->v.value}};
    }
  }
  doc["event_distribution"] = "uniform admissible candidate, rejection sampled";
  Json summary;
  summary["events"] = s.events;
  summary["insertions"] = s.insertions;
  summary["deletions"] = s.deletions;
  summary["vertices"] = s.vertices;
  summary["initial_colors"] = s.initial_colors;
  summary["final_colors"] = r.final_state.color_count;
  summary["conflict_workload"] = s.conflict_workload;
  summary["max_recolored"] = s.max_recolored;
  summary["mean_recolored"] = s.mean_recolored;
  summary["max_pairs_changed"] = s.max_pairs_changed;
  summary["max_recolored_insert"] = s.max_recolored_insert;
  summary["max_pairs_changed_insert"] = s.max_pairs_changed_insert;
  summary["bound_checks"] = s.bound_checks;
  summary["bound_exceeded"] = s.bound_exceeded;
  summary["fallbacks"] = s.fallbacks;
  summary["widened_searches"] = s.widened_searches;
  summary["equivalence_checks"] = s.equivalence_checks;
  summary["equivalence_passed"] = s.equivalence_passed;
  summary["oracle_checks"] = s.oracle_checks;
  summary["oracle_passed"] = s.oracle_passed;
  summary["cases"] = s.cases;
  summary["wall_us_total"] = s.wall_us_total;
  summary["wall_us_max"] = s.wall_us_max;
  doc["summary"] = std::move(summary);
  return doc;
}

void write_trial_outputs(const TrialConfig& cfg, const TrialReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
    if (!f) throw GraphError("cannot write " + (std::filesystem::path(dir) / name).string());
    return f;
  };
  {
    auto f = open("events.jsonl");
    for (const auto& e : r.events) {
      auto line = update_report_to_json(e.report, e.seq);
      line["wall_us"] = e.wall_us;
      f << line.dump() << '\n';
    }
  }
  {
    auto f = open("summary.csv");
    f << csv_header() << '\n';
    for (const auto& e : r.events) f << csv_row(e) << '\n';
  }
  {
    auto f = open("report.json");
    f << trial_report_to_json(cfg, r).dump(2) << '\n';
  }
}

}  // namespace timcolor
