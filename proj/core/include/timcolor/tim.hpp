#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "timcolor/dynamic_coloring.hpp"
#include "timcolor/graph.hpp"
#include "timcolor/static_coloring.hpp"

namespace timcolor {

/// A message from source i to destination j (both 0-based).
struct Message {
  int source = 0;
  int destination = 0;
  friend auto operator<=>(const Message&, const Message&) = default;
};

/// "S<i+1>->D<j+1>"
std::string to_string(const Message& m);

/// Partially connected network: connected(j, i) iff S_i reaches D_j.
class TopologyGraph {
 public:
  TopologyGraph() = default;
  TopologyGraph(int sources, int destinations);

  int sources() const { return m_; }
  int destinations() const { return n_; }

  bool connected(int j, int i) const;
  /// Throws GraphError on out-of-range indices or duplicate links.
  void add_link(int j, int i);
  void remove_link(int j, int i);

  /// (j, i) pairs in row-major order.
  std::vector<std::pair<int, int>> links() const;
  std::size_t link_count() const;

  /// Sources are vertices 0..M-1, destination j is vertex M+j.
  Graph bipartite_graph() const;
  Bipartition bipartition() const;

  friend bool operator==(const TopologyGraph&, const TopologyGraph&) = default;

 private:
  void check(int j, int i, const char* what) const;

  int m_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> t_;  // row-major N x M
};

struct TopologyFile {
  TopologyGraph topology;
  /// Present when the file lists "messages"; otherwise all-unicast is meant.
  std::optional<std::vector<Message>> messages;
};

/// {"M": int, "N": int, "links": [[j,i],...], "messages": [[j,i],...]?}.
/// Throws GraphError on malformed input.
TopologyFile load_topology(std::string_view text);
TopologyFile load_topology_file(const std::string& path);
std::string topology_to_json(const TopologyGraph& t);

/// One message per connected link, destination-major.
std::vector<Message> all_unicast_messages(const TopologyGraph& t);

struct ConflictGraph {
  Graph graph;                    // vertex k is messages[k]
  std::vector<Message> messages;
};

/// Edge between two messages iff they share a source, share a destination,
/// or either source reaches the other destination. Throws GraphError for a
/// message on a missing link or a repeated message.
ConflictGraph build_conflict_graph(const TopologyGraph& t, const std::vector<Message>& msgs);

struct LinkEvent {
  EventKind kind = EventKind::insert;
  int destination = 0;
  int source = 0;
};

struct ConflictEdgeEvent {
  EventKind kind = EventKind::insert;
  VertexId u;
  VertexId v;
  friend bool operator==(const ConflictEdgeEvent&, const ConflictEdgeEvent&) = default;
};

struct ConflictDeltas {
  bool supported = true;
  std::string diagnostic;  // why the event is unsupported
  std::vector<ConflictEdgeEvent> events;  // sorted by (u, v)
};

/// Conflict-graph edge changes caused by a link insertion or deletion with
/// the message set held fixed. When `all_unicast` is set the message set is
/// tied to the links, so every link event would change it and is reported
/// as unsupported; the same holds for deleting a link that carries a message.
ConflictDeltas topology_event_to_conflict_deltas(const TopologyGraph& t,
                                                 const std::vector<Message>& msgs,
                                                 const LinkEvent& event,
                                                 bool all_unicast = false);

struct Rational {
  long num = 0;
  long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(long num, long den);
std::string to_string(const Rational& r);

/// TDMA time-sharing accounting: every color class is one slot.
struct DofReport {
  bool defined = false;  // false for an empty message set
  Rational symmetric_dof;
  Rational sum_dof;
  int color_count = 0;
  int message_count = 0;
};

DofReport dof_report(const ColoringState& s, const std::vector<Message>& msgs);

/// slots[k] holds the message vertices colored k+1, ascending.
struct Schedule {
  std::vector<std::vector<VertexId>> slots;
};
Schedule emit_schedule(const ColoringState& s, const std::vector<Message>& msgs);

}  // namespace timcolor
