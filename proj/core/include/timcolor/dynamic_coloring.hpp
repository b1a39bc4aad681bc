#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timcolor/graph.hpp"
#include "timcolor/static_coloring.hpp"

namespace timcolor {

enum class EventKind { insert, remove };

std::string to_string(EventKind k);  // "insert" / "delete"

enum class UpdateCase { I1, I21, I22, I31, I32, D1, D2 };

std::string to_string(UpdateCase c);  // "I-1", "I-2-1", ...

struct UpdateReport {
  EventKind kind = EventKind::insert;
  VertexId u;
  VertexId v;
  UpdateCase case_label = UpdateCase::I1;
  std::vector<VertexId> recolored;  // ascending
  std::vector<ContractionRecord> pairs_removed;
  std::vector<ContractionRecord> pairs_added;
  int colors_before = 0;
  int colors_after = 0;
  int omega_before = 0;
  int omega_after = 0;
  bool fallback_used = false;
  /// The order repair had to look for two-pairs outside the neighborhood of
  /// the event.
  bool search_widened = false;
  std::string fallback_reason;
};

struct DynamicOptions {
  /// Check the weak-chordality contract of each event and verify_state after.
  bool verify = false;
};

/// Thrown when an event breaks the caller's contract (edge present/absent,
/// unknown vertex, or, with verify on, a hole or antihole would appear).
class UpdateRejected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff inserting (u,v) raises the clique number: N(u) & N(v) holds a
/// clique of size omega - 1. (u,v) may or may not already be present.
bool clique_grows(const ColoringState& s, VertexId u, VertexId v);

/// Index of the record of s.order that contracts u against v: one side is
/// exactly the original u (or v) and the other side's class contains the
/// other endpoint.
std::optional<std::size_t> order_record_for(const SolutionOrder& order, VertexId u, VertexId v);

struct RepairResult {
  SolutionOrder order;  // valid complete order for the new graph
  Graph final_graph;    // the clique the order ends in
  std::vector<ContractionRecord> removed;
  std::vector<ContractionRecord> added;
  bool widened = false;
};

/// Rebuild a solution order for h from an old one. Old records are replayed by
/// their provenance classes whenever they are still two-pairs; when none
/// applies, a new two-pair is chosen among those touching or neighboring a
/// vertex that holds an affected original (globally if there are none).
/// Each candidate is scored by the records changed after a greedy finish.
RepairResult repair_affected(const Graph& h, const SolutionOrder& old,
                             std::span<const VertexId> affected);

std::pair<ColoringState, UpdateReport> insert_update(const ColoringState& s, VertexId u,
                                                     VertexId v, const DynamicOptions& opts = {});

std::pair<ColoringState, UpdateReport> delete_update(const ColoringState& s, VertexId u,
                                                     VertexId v, const DynamicOptions& opts = {});

}  // namespace timcolor
