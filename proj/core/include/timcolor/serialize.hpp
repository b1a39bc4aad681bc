#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "timcolor/dynamic_coloring.hpp"
#include "timcolor/static_coloring.hpp"
#include "timcolor/tim.hpp"

namespace timcolor {

using Json = nlohmann::ordered_json;

/// {"graph": {...}, "colors": {id: c}, "color_count": c, "clique": [ids],
///  "order": [[x,y,z],...]}
Json state_to_json(const ColoringState& s);
/// Inverse of state_to_json. The order is replayed to recover provenance, so
/// an order that does not replay throws GraphError.
ColoringState state_from_json(const Json& doc);
ColoringState load_state_file(const std::string& path);

Json record_to_json(const ContractionRecord& r);
Json update_report_to_json(const UpdateReport& r, long seq);

Json dof_to_json(const DofReport& d);
/// {"slots": [[msg,...],...]} with messages written as "S<i>->D<j>".
Json schedule_to_json(const Schedule& sched, const std::vector<Message>& msgs);

}  // namespace timcolor
