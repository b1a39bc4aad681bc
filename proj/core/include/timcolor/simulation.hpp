#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "timcolor/dynamic_coloring.hpp"
#include "timcolor/generators.hpp"
#include "timcolor/serialize.hpp"

namespace timcolor {

struct PerturbationEvent {
  EventKind kind = EventKind::insert;
  VertexId u;
  VertexId v;
  long seq = 0;
};

/// Default rejection cap for one event: 50 * |V|^2 candidate draws.
std::size_t default_rejection_cap(const Graph& g);

/// Draws one weak-chordality-preserving edge event. The kind is chosen with
/// probability insert_fraction for insertions; if no candidate of that kind
/// is admissible within the cap, the other kind is tried unless the mix
/// excludes it (insert_fraction of 0 or 1). nullopt means saturation.
std::optional<PerturbationEvent> gen_event(const Graph& g, Rng& rng, double insert_fraction,
                                           std::size_t cap = 0);

enum class Verification { off, spot, full };

/// stream: every event is applied to the result of the previous one.
/// independent: every event is drawn for and applied to the initial state.
enum class EventMode { stream, independent };

struct GeneratorParams {
  int sources = 6;
  int destinations = 6;
  double density = 0.5;
};

struct TrialConfig {
  std::uint64_t seed = 42;
  std::optional<std::string> topology;  // path, all-unicast conflict graph
  std::optional<std::string> graph;     // path, used as is
  GeneratorParams generator;            // when neither path is given
  long event_count = 100;
  double insert_fraction = 0.5;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t bound = 8;
  Verification verification = Verification::full;
  long spot_every = 10;
  EventMode mode = EventMode::stream;
  bool timing = false;
  /// Fixed events replacing the generator; event_count is then ignored and
  /// each event is checked against the weak-chordality contract.
  std::vector<PerturbationEvent> script;
};

/// Reads the config JSON; "events" is a list of ["insert"|"delete", u, v].
/// Relative paths are taken relative to base_dir.
TrialConfig trial_config_from_json(const Json& doc, const std::string& base_dir = "");
TrialConfig load_trial_config(const std::string& path);
Json trial_config_to_json(const TrialConfig& cfg);

struct EventRecord {
  long seq = 0;
  UpdateReport report;
  long wall_us = 0;
};

enum class TrialStatus { ok, saturated, assertion_failed };
std::string to_string(TrialStatus s);

struct TrialSummary {
  long events = 0;
  long insertions = 0;
  long deletions = 0;
  std::size_t vertices = 0;
  int initial_colors = 0;
  bool conflict_workload = false;
  std::size_t max_recolored = 0;
  double mean_recolored = 0;
  std::size_t max_pairs_changed = 0;
  std::size_t max_recolored_insert = 0;
  std::size_t max_pairs_changed_insert = 0;
  long bound_checks = 0;    // insertions applied to the workload's conflict graph itself
  long bound_exceeded = 0;  // insertions over the bound, checked or not
  long fallbacks = 0;
  long widened_searches = 0;
  long equivalence_checks = 0;
  long equivalence_passed = 0;
  long oracle_checks = 0;
  long oracle_passed = 0;
  std::map<std::string, long> cases;
  long wall_us_total = 0;
  long wall_us_max = 0;
};

struct TrialReport {
  TrialStatus status = TrialStatus::ok;
  std::string failure;  // assertion message when status is assertion_failed
  std::optional<PerturbationEvent> failing_event;
  std::vector<EventRecord> events;
  TrialSummary summary;
  ColoringState final_state;
};

/// Graph a trial starts from, and whether it is a conflict graph.
struct Workload {
  Graph graph;
  bool conflict_graph = false;
};
Workload build_workload(const TrialConfig& cfg, Rng& rng);

/// Runs one trial. Every event is applied with insert_update or
/// delete_update, checked with verify_state, and (depending on the
/// verification tier) compared with a fresh static coloring and the oracle.
/// On conflict-graph workloads fallbacks are never allowed, and the
/// per-insertion bound is asserted for insertions into the conflict graph
/// itself; later stream events only count towards bound_exceeded. The first
/// failed assertion ends the trial.
TrialReport run_simulation(const TrialConfig& cfg);

const char* csv_header();
std::string csv_row(const EventRecord& e);
Json trial_report_to_json(const TrialConfig& cfg, const TrialReport& r);

/// Writes events.jsonl, summary.csv and report.json into dir.
void write_trial_outputs(const TrialConfig& cfg, const TrialReport& r, const std::string& dir);

}  // namespace timcolor
