#include "timcolor/tim.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

#include "timcolor/graph_io.hpp"

namespace timcolor {

std::string to_string(const Message& m) {
  return "S" + std::to_string(m.source + 1) + "->D" + std::to_string(m.destination + 1);
}

TopologyGraph::TopologyGraph(int sources, int destinations)
    : m_(sources), n_(destinations) {
  if (sources < 0 || destinations < 0) throw GraphError("topology: negative size");
  t_.assign(static_cast<std::size_t>(sources) * static_cast<std::size_t>(destinations), 0);
}

void TopologyGraph::check(int j, int i, const char* what) const {
  if (j < 0 || j >= n_ || i < 0 || i >= m_) {
    throw GraphError(std::string(what) + ": link [" + std::to_string(j) + "," +
                     std::to_string(i) + "] out of range");
  }
}

bool TopologyGraph::connected(int j, int i) const {
  check(j, i, "connected");
  return t_[static_cast<std::size_t>(j) * m_ + i] != 0;
}

void TopologyGraph::add_link(int j, int i) {
  check(j, i, "add_link");
  auto& cell = t_[static_cast<std::size_t>(j) * m_ + i];
  if (cell) {
    throw GraphError("add_link: duplicate link [" + std::to_string(j) + "," +
                     std::to_string(i) + "]");
  }
  cell = 1;
}

void TopologyGraph::remove_link(int j, int i) {
  check(j, i, "remove_link");
  auto& cell = t_[static_cast<std::size_t>(j) * m_ + i];
  if (!cell) {
    throw GraphError("remove_link: link [" + std::to_string(j) + "," + std::to_string(i) +
                     "] absent");
  }
  cell = 0;
}

std::vector<std::pair<int, int>> TopologyGraph::links() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < m_; ++i) {
      if (t_[static_cast<std::size_t>(j) * m_ + i]) out.emplace_back(j, i);
    }
  }
  return out;
}

std::size_t TopologyGraph::link_count() const {
  return static_cast<std::size_t>(std::count(t_.begin(), t_.end(), 1));
}

Graph TopologyGraph::bipartite_graph() const {
  Graph g(static_cast<std::size_t>(m_ + n_));
  for (auto [j, i] : links()) {
    g.add_edge(VertexId(static_cast<std::uint32_t>(i)),
               VertexId(static_cast<std::uint32_t>(m_ + j)));
  }
  return g;
}

Bipartition TopologyGraph::bipartition() const {
  Bipartition p;
  for (int i = 0; i < m_; ++i) p.left.emplace_back(static_cast<std::uint32_t>(i));
  for (int j = 0; j < n_; ++j) p.right.emplace_back(static_cast<std::uint32_t>(m_ + j));
  return p;
}

namespace {

std::pair<int, int> read_pair(const nlohmann::json& e, const char* what) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
      !e[1].is_number_integer()) {
    throw GraphError(std::string("topology: malformed ") + what + " entry " + e.dump());
  }
  return {e[0].get<int>(), e[1].get<int>()};
}

}  // namespace

TopologyFile load_topology(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("topology: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("M") || !doc.contains("N") || !doc.contains("links")) {
    throw GraphError("topology: expected an object with M, N and links");
  }
  if (!doc["M"].is_number_integer() || !doc["N"].is_number_integer() ||
      !doc["links"].is_array()) {
    throw GraphError("topology: M and N must be integers and links an array");
  }
  TopologyFile out;
  out.topology = TopologyGraph(doc["M"].get<int>(), doc["N"].get<int>());
  for (const auto& e : doc["links"]) {
    auto [j, i] = read_pair(e, "link");
    out.topology.add_link(j, i);
  }
  if (doc.contains("messages")) {
    if (!doc["messages"].is_array()) throw GraphError("topology: messages must be an array");
    out.messages.emplace();
    for (const auto& e : doc["messages"]) {
      auto [j, i] = read_pair(e, "message");
      out.messages->push_back({i, j});
    }
  }
  return out;
}

TopologyFile load_topology_file(const std::string& path) {
  return load_topology(read_text_file(path));
}

std::string topology_to_json(const TopologyGraph& t) {
  nlohmann::json doc;
  doc["M"] = t.sources();
  doc["N"] = t.destinations();
  doc["links"] = nlohmann::json::array();
  for (auto [j, i] : t.links()) doc["links"].push_back({j, i});
  return doc.dump();
}

std::vector<Message> all_unicast_messages(const TopologyGraph& t) {
  std::vector<Message> out;
  for (auto [j, i] : t.links()) out.push_back({i, j});
  return out;
}

namespace {

bool conflict(const TopologyGraph& t, const Message& a, const Message& b) {
  return a.source == b.source || a.destination == b.destination ||
         t.connected(b.destination, a.source) || t.connected(a.destination, b.source);
}

void check_messages(const TopologyGraph& t, const std::vector<Message>& msgs) {
  std::set<Message> seen;
  for (const auto& m : msgs) {
    if (m.destination < 0 || m.destination >= t.destinations() || m.source < 0 ||
        m.source >= t.sources() || !t.connected(m.destination, m.source)) {
      throw GraphError("message " + to_string(m) + " does not travel a connected link");
    }
    if (!seen.insert(m).second) throw GraphError("message " + to_string(m) + " repeated");
  }
}

}  // namespace

ConflictGraph build_conflict_graph(const TopologyGraph& t, const std::vector<Message>& msgs) {
  check_messages(t, msgs);
  ConflictGraph out{Graph(msgs.size()), msgs};
  for (std::size_t a = 0; a < msgs.size(); ++a) {
    for (std::size_t b = a + 1; b < msgs.size(); ++b) {
      if (conflict(t, msgs[a], msgs[b])) {
        out.graph.add_edge(VertexId(static_cast<std::uint32_t>(a)),
                           VertexId(static_cast<std::uint32_t>(b)));
      }
    }
  }
  return out;
}

ConflictDeltas topology_event_to_conflict_deltas(const TopologyGraph& t,
                                                 const std::vector<Message>& msgs,
                                                 const LinkEvent& event, bool all_unicast) {
  ConflictDeltas out;
  const std::string link = "S" + std::to_string(event.source + 1) + "->D" +
                           std::to_string(event.destination + 1);
  if (all_unicast) {
    out.supported = false;
    out.diagnostic = "link " + link + " changes the all-unicast message set";
    return out;
  }
  TopologyGraph after = t;
  if (event.kind == EventKind::insert) {
    after.add_link(event.destination, event.source);
  } else {
    for (const auto& m : msgs) {
      if (m.source == event.source && m.destination == event.destination) {
        out.supported = false;
        out.diagnostic = "link " + link + " carries a message";
        return out;
      }
    }
    after.remove_link(event.destination, event.source);
  }
  auto before_g = build_conflict_graph(t, msgs).graph;
  auto after_g = build_conflict_graph(after, msgs).graph;
  auto be = before_g.edges();
  auto ae = after_g.edges();
  std::vector<Edge> gone, added;
  std::set_difference(be.begin(), be.end(), ae.begin(), ae.end(), std::back_inserter(gone));
  std::set_difference(ae.begin(), ae.end(), be.begin(), be.end(), std::back_inserter(added));
  for (auto [a, b] : added) out.events.push_back({EventKind::insert, a, b});
  for (auto [a, b] : gone) out.events.push_back({EventKind::remove, a, b});
  std::sort(out.events.begin(), out.events.end(), [](const auto& x, const auto& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  return out;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

DofReport dof_report(const ColoringState& s, const std::vector<Message>& msgs) {
  DofReport out;
  out.color_count = s.color_count;
  out.message_count = static_cast<int>(msgs.size());
  if (s.color_count == 0) return out;
  out.defined = true;
  out.symmetric_dof = make_rational(1, s.color_count);
  out.sum_dof = make_rational(static_cast<long>(msgs.size()), s.color_count);
  return out;
}

Schedule emit_schedule(const ColoringState& s, const std::vector<Message>& msgs) {
  if (s.graph.vertex_count() != msgs.size()) {
    throw GraphError("emit_schedule: state and message set differ in size");
  }
  Schedule out;
  out.slots.resize(static_cast<std::size_t>(s.color_count));
  for (auto [v, c] : s.coloring) out.slots.at(static_cast<std::size_t>(c - 1)).push_back(v);
  return out;
}

}  // namespace timcolor
