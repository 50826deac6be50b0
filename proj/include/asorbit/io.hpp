#pragma once

#include <json.hpp>
#include <string>

#include "asorbit/bruhat.hpp"
#include "asorbit/poset.hpp"
#include "asorbit/rank_control.hpp"

namespace asorbit {

using ordered_json = nlohmann::ordered_json;

// Rank levels descending, then the cover list; mirrors the level-by-level
// Hasse-diagram layout.
std::string poset_to_text(const OrbitPoset& poset);

// digraph with edges lower -> upper and same-rank alignment groups.
std::string poset_to_dot(const OrbitPoset& poset);

ordered_json poset_to_json(const OrbitPoset& poset);
OrbitPoset poset_from_json(const nlohmann::json& j);  // throws std::invalid_argument

ordered_json rank_control_to_json(const RankControlMatrix& rc);
RankControlMatrix rank_control_from_json(const nlohmann::json& j);

ordered_json fpf_report_to_json(const FpfComparisonReport& report);

}  // namespace asorbit
