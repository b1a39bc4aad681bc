#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "timcolor/dynamic_coloring.hpp"
#include "timcolor/graph_io.hpp"
#include "timcolor/oracles.hpp"
#include "timcolor/serialize.hpp"
#include "timcolor/simulation.hpp"
#include "timcolor/static_coloring.hpp"
#include "timcolor/tim.hpp"

namespace fs = std::filesystem;
using namespace timcolor;

namespace {

enum Exit { kOk = 0, kUsage = 1, kAssert = 2 };

// Thrown for failed checks (verify, bound); maps to exit code 2.
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  bool verify = false;
  std::optional<std::size_t> oracle_cap;
  std::optional<std::size_t> bound;
  std::string out;
  bool json_errors = false;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GraphError("cannot write " + path.string());
  f << text;
}

// Prints doc, or writes it to <out>/<name> when --out is set.
void emit(const Globals& g, const Json& doc, const char* name) {
  if (g.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_file(fs::path(g.out) / name, doc.dump(2) + "\n");
    std::cout << (fs::path(g.out) / name).string() << '\n';
  }
}

void warn_fallback(const UpdateReport& r) {
  if (r.fallback_used) std::cerr << "warning: static recompute fallback: " << r.fallback_reason << '\n';
}

std::vector<Message> messages_of(const TopologyFile& tf) {
  return tf.messages ? *tf.messages : all_unicast_messages(tf.topology);
}

int cmd_color(const Globals& g, const std::string& path) {
  StaticOptions opts;
  opts.verify = g.verify;
  if (g.seed) opts.selector = random_pair_selector(*g.seed);
  auto s = static_color(load_graph_file(path).graph, opts);
  emit(g, state_to_json(s), "state.json");
  return kOk;
}

int cmd_conflict(const Globals& g, const std::string& path) {
  auto tf = load_topology_file(path);
  auto cg = build_conflict_graph(tf.topology, messages_of(tf));
  VertexLabels labels;
  for (std::size_t k = 0; k < cg.messages.size(); ++k) {
    labels[VertexId(static_cast<std::uint32_t>(k))] = to_string(cg.messages[k]);
  }
  emit(g, Json::parse(graph_to_json(cg.graph, labels)), "conflict.json");
  return kOk;
}

int cmd_schedule(const Globals& g, const std::string& path) {
  auto tf = load_topology_file(path);
  auto cg = build_conflict_graph(tf.topology, messages_of(tf));
  StaticOptions opts;
  opts.verify = g.verify;
  auto s = static_color(cg.graph, opts);
  Json doc = schedule_to_json(emit_schedule(s, cg.messages), cg.messages);
  doc["dof"] = dof_to_json(dof_report(s, cg.messages));
  emit(g, doc, "schedule.json");
  return kOk;
}

int cmd_update(const Globals& g, EventKind kind, const std::string& path, std::uint32_t u,
               std::uint32_t v) {
  auto s = load_state_file(path);
  DynamicOptions opts{g.verify};
  auto [next, report] = kind == EventKind::insert
                            ? insert_update(s, VertexId(u), VertexId(v), opts)
                            : delete_update(s, VertexId(u), VertexId(v), opts);
  warn_fallback(report);
  std::cout << update_report_to_json(report, 0).dump() << '\n';
  if (!g.out.empty()) write_file(fs::path(g.out) / "state.json", state_to_json(next).dump(2) + "\n");
  if (g.bound) {
    auto pairs = report.pairs_removed.size() + report.pairs_added.size();
    if (report.recolored.size() > *g.bound || pairs > *g.bound) {
      throw AssertionFailure("update exceeds bound " + std::to_string(*g.bound) + ": recolored " +
                             std::to_string(report.recolored.size()) + ", pairs changed " +
                             std::to_string(pairs));
    }
  }
  return kOk;
}

int cmd_simulate(const Globals& g, const std::string& path) {
  auto cfg = load_trial_config(path);
  if (g.seed) cfg.seed = *g.seed;
  if (g.verify) cfg.verification = Verification::full;
  if (g.oracle_cap) cfg.oracle_cap = *g.oracle_cap;
  if (g.bound) cfg.bound = *g.bound;
  auto r = run_simulation(cfg);
  if (r.summary.fallbacks > 0) {
    std::cerr << "warning: " << r.summary.fallbacks << " events used the static recompute fallback\n";
  }
  if (g.out.empty()) {
    std::cout << csv_header() << '\n';
    for (const auto& e : r.events) std::cout << csv_row(e) << '\n';
  } else {
    write_trial_outputs(cfg, r, g.out);
  }
  const auto& sm = r.summary;
  std::cerr << "status " << to_string(r.status) << ", events " << sm.events << ", max recolored "
            << sm.max_recolored << ", max pairs changed " << sm.max_pairs_changed << ", fallbacks "
            << sm.fallbacks << '\n';
  if (r.status == TrialStatus::assertion_failed) throw AssertionFailure(r.failure);
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& path) {
  auto doc = Json::parse(read_text_file(path));
  VerifyResult res;
  try {
    res = verify_state(state_from_json(doc));
  } catch (const GraphError& e) {
    res.ok = false;
    res.diagnostics.push_back(e.what());
  }
  Json out{{"ok", res.ok}, {"diagnostics", res.diagnostics}};
  emit(g, out, "verify.json");
  if (!res.ok) throw AssertionFailure("state failed verification");
  return kOk;
}

int cmd_oracle(const Globals& g, const std::string& path) {
  auto graph = load_graph_file(path).graph;
  auto cap = g.oracle_cap.value_or(kDefaultOracleCap);
  auto clique = oracle_max_clique(graph, cap);
  Json ids = Json::array();
  for (auto v : clique) ids.push_back(v.value);
  Json out{{"chi", oracle_chromatic(graph, cap)},
           {"omega", clique.size()},
           {"clique", ids}};
  emit(g, out, "oracle.json");
  return kOk;
}

int fail(const Globals& g, int code, const char* kind, const std::string& msg) {
  if (g.json_errors) {
    std::cerr << Json{{"error", kind}, {"message", msg}, {"exit_code", code}}.dump() << '\n';
  } else {
    std::cerr << "error: " << msg << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic coloring of weakly chordal conflict graphs"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  std::size_t oracle_cap = 0, bound = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed (simulate) or random pair selection (color)");
  app.add_flag("--verify", g.verify, "Check weak chordality and verify every result");
  auto* cap_opt = app.add_option("--oracle-cap", oracle_cap, "Largest graph given to the oracles");
  auto* bound_opt = app.add_option("--bound", bound, "Per-update bound on recolored and pairs changed");
  app.add_option("--out", g.out, "Write results into this directory");
  app.add_flag("--json", g.json_errors, "Errors as JSON on stderr");

  std::string path;
  std::uint32_t u = 0, v = 0;
  auto file_cmd = [&](const char* name, const char* help, const char* what) {
    auto* c = app.add_subcommand(name, help);
    c->add_option(what, path)->required();
    c->fallthrough();
    return c;
  };
  auto* color = file_cmd("color", "Static coloring of a graph", "graph");
  auto* conflict = file_cmd("conflict", "Conflict graph of a topology", "topology");
  auto* schedule = file_cmd("schedule", "Slots and DoF for a topology", "topology");
  auto* simulate = file_cmd("simulate", "Run one trial", "config");
  auto* verify = file_cmd("verify", "Check a saved state", "state");
  auto* oracle = file_cmd("oracle", "Exact chromatic number and clique", "graph");
  auto* insert = file_cmd("insert", "Insert edge u-v into a saved state", "state");
  auto* erase = file_cmd("delete", "Delete edge u-v from a saved state", "state");
  for (auto* c : {insert, erase}) {
    c->add_option("u", u)->required();
    c->add_option("v", v)->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(g, kUsage, "usage", e.what());
  }
  if (*seed_opt) g.seed = seed;
  if (*cap_opt) g.oracle_cap = oracle_cap;
  if (*bound_opt) g.bound = bound;

  try {
    if (*color) return cmd_color(g, path);
    if (*conflict) return cmd_conflict(g, path);
    if (*schedule) return cmd_schedule(g, path);
    if (*simulate) return cmd_simulate(g, path);
    if (*verify) return cmd_verify(g, path);
    if (*oracle) return cmd_oracle(g, path);
    if (*insert) return cmd_update(g, EventKind::insert, path, u, v);
    if (*erase) return cmd_update(g, EventKind::remove, path, u, v);
  } catch (const AssertionFailure& e) {
    return fail(g, kAssert, "assertion", e.what());
  } catch (const UpdateRejected& e) {
    return fail(g, kUsage, "rejected", e.what());
  } catch (const NotWeaklyChordal& e) {
    return fail(g, kUsage, "not_weakly_chordal", e.what());
  } catch (const OracleCapExceeded& e) {
    return fail(g, kUsage, "oracle_cap", e.what());
  } catch (const std::exception& e) {
    return fail(g, kUsage, "input", e.what());
  }
  return kUsage;
}
