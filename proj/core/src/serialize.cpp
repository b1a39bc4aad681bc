#include "timcolor/serialize.hpp"

#include "timcolor/graph_io.hpp"

namespace timcolor {

namespace {

Json id_list(const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (auto v : ids) out.push_back(v.value);
  return out;
}

VertexId read_id(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    throw GraphError("state: vertex id must be a non-negative integer, got " + j.dump());
  }
  return VertexId(j.get<std::uint32_t>());
}

}  // namespace

Json record_to_json(const ContractionRecord& r) { return Json::array({r.x.value, r.y.value, r.z.value}); }

Json state_to_json(const ColoringState& s) {
  Json doc;
  doc["graph"] = Json::parse(graph_to_json(s.graph));
  Json colors = Json::object();
  for (auto [v, c] : s.coloring) colors[std::to_string(v.value)] = c;
  doc["colors"] = std::move(colors);
  doc["color_count"] = s.color_count;
  doc["clique"] = id_list(s.clique);
  Json order = Json::array();
  for (const auto& r : s.order.records) order.push_back(record_to_json(r));
  doc["order"] = std::move(order);
  return doc;
}

ColoringState state_from_json(const Json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("graph")) {
      throw GraphError("state: expected an object with a graph");
    }
    Graph g = graph_from_json(doc.at("graph").dump());
    SolutionOrder order;
    for (const auto& r : doc.value("order", Json::array())) {
      if (!r.is_array() || r.size() != 3) throw GraphError("state: order entries are [x,y,z]");
      order.records.push_back({read_id(r[0]), read_id(r[1]), read_id(r[2]), {}, {}});
    }
    auto replay = replay_order(g, order);
    ColoringState s;
    s.graph = std::move(g);
    s.order = std::move(replay.order);
    const Json colors = doc.value("colors", Json::object());
    for (const auto& [k, c] : colors.items()) {
      s.coloring[VertexId(static_cast<std::uint32_t>(std::stoul(k)))] = c.get<Color>();
    }
    s.color_count = doc.value("color_count", 0);
    for (const auto& v : doc.value("clique", Json::array())) s.clique.push_back(read_id(v));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("state: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const GraphError*>(&e)) throw;
    throw GraphError(std::string("state: ") + e.what());
  }
}

ColoringState load_state_file(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(path + ": " + e.what());
  }
  return state_from_json(doc);
}

Json update_report_to_json(const UpdateReport& r, long seq) {
  Json doc;
  doc["seq"] = seq;
  doc["kind"] = to_string(r.kind);
  doc["u"] = r.u.value;
  doc["v"] = r.v.value;
  doc["case"] = to_string(r.case_label);
  doc["recolored"] = id_list(r.recolored);
  Json removed = Json::array();
  for (const auto& p : r.pairs_removed) removed.push_back({id_list(p.x_members), id_list(p.y_members)});
  Json added = Json::array();
  for (const auto& p : r.pairs_added) added.push_back({id_list(p.x_members), id_list(p.y_members)});
  doc["pairs_removed"] = std::move(removed);
  doc["pairs_added"] = std::move(added);
  doc["colors_before"] = r.colors_before;
  doc["colors_after"] = r.colors_after;
  doc["omega_before"] = r.omega_before;
  doc["omega_after"] = r.omega_after;
  doc["fallback"] = r.fallback_used;
  doc["search_widened"] = r.search_widened;
  if (r.fallback_used) doc["fallback_reason"] = r.fallback_reason;
  return doc;
}

Json dof_to_json(const DofReport& d) {
  Json doc;
  doc["message_count"] = d.message_count;
  doc["color_count"] = d.color_count;
  doc["accounting"] = "tdma-time-sharing";
  if (d.defined) {
    doc["symmetric_dof"] = to_string(d.symmetric_dof);
    doc["sum_dof"] = to_string(d.sum_dof);
  } else {
    doc["symmetric_dof"] = nullptr;
    doc["sum_dof"] = nullptr;
    doc["note"] = "undefined for an empty message set";
  }
  return doc;
}

Json schedule_to_json(const Schedule& sched, const std::vector<Message>& msgs) {
  Json slots = Json::array();
  for (const auto& slot : sched.slots) {
    Json row = Json::array();
    for (auto v : slot) row.push_back(to_string(msgs.at(v.value)));
    slots.push_back(std::move(row));
  }
  Json doc;
  doc["slots"] = std::move(slots);
  return doc;
}

}  // namespace timcolor
