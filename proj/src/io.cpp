#include "asorbit/io.hpp"

#include <algorithm>
#include <sstream>

namespace asorbit {

std::string poset_to_text(const OrbitPoset& poset) {
  std::ostringstream os;
  os << "orbit poset n=" << poset.n() << ": " << poset.size() << " orbits, "
     << poset.covers().size() << " covers\n";
  int max_rank = 0;
  for (int i = 0; i < poset.size(); ++i) max_rank = std::max(max_rank, poset.node(i).rank);
  for (int r = max_rank; r >= 0; --r) {
    std::vector<int> level;
    for (int i = 0; i < poset.size(); ++i)
      if (poset.node(i).rank == r) level.push_back(i);
    if (level.empty()) continue;
    os << "rank " << r << ":";
    for (int i : level) os << ' ' << poset.node(i).inv.cycles_str();
    os << "\n";
  }
  os << "covers:\n";
  for (const auto& [lo, hi] : poset.covers())
    os << "  " << poset.node(lo).inv.cycles_str() << " < " << poset.node(hi).inv.cycles_str()
       << "\n";
  return os.str();
}

std::string poset_to_dot(const OrbitPoset& poset) {
  std::ostringstream os;
  os << "digraph orbit_poset_n" << poset.n() << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int i = 0; i < poset.size(); ++i)
    os << "  v" << i << " [label=\"" << poset.node(i).inv.cycles_str() << "\\nrank "
       << poset.node(i).rank << "\"];\n";
  int max_rank = 0;
  for (int i = 0; i < poset.size(); ++i) max_rank = std::max(max_rank, poset.node(i).rank);
  for (int r = max_rank; r >= 0; --r) {
    std::vector<int> level;
    for (int i = 0; i < poset.size(); ++i)
      if (poset.node(i).rank == r) level.push_back(i);
    if (level.empty()) continue;
    os << "  { rank=same;";
    for (int i : level) os << " v" << i << ";";
    os << " }\n";
  }
  for (const auto& [lo, hi] : poset.covers()) os << "  v" << lo << " -> v" << hi << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json rank_control_to_json(const RankControlMatrix& rc) {
  ordered_json rows = ordered_json::array();
  for (int k = 0; k < rc.n(); ++k) {
    ordered_json row = ordered_json::array();
    for (int l = 0; l < rc.n(); ++l) row.push_back(rc.at(k, l));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"n", rc.n()}, {"r", std::move(rows)}};
}

RankControlMatrix rank_control_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r"))
    throw std::invalid_argument("rank-control json needs fields n and r");
  const int n = j.at("n").get<int>();
  std::vector<int> entries;
  for (const auto& row : j.at("r")) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("rank-control json row length mismatch");
    for (const auto& v : row) entries.push_back(v.get<int>());
  }
  return RankControlMatrix(n, std::move(entries));
}

ordered_json poset_to_json(const OrbitPoset& poset) {
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < poset.size(); ++i) {
    const PosetNode& node = poset.node(i);
    ordered_json rc_rows = ordered_json::array();
    for (int k = 0; k < node.rc.n(); ++k) {
      ordered_json row = ordered_json::array();
      for (int l = 0; l < node.rc.n(); ++l) row.push_back(node.rc.at(k, l));
      rc_rows.push_back(std::move(row));
    }
    nodes.push_back(ordered_json{{"id", i},
                                 {"cycles", node.inv.cycles_str()},
                                 {"rank", node.rank},
                                 {"rank_control", std::move(rc_rows)}});
  }
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back(ordered_json::array({lo, hi}));
  return ordered_json{{"n", poset.n()}, {"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

OrbitPoset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("nodes") || !j.contains("covers"))
    throw std::invalid_argument("poset json needs fields n, nodes and covers");
  const int n = j.at("n").get<int>();
  std::vector<PosetNode> nodes;
  int expect_id = 0;
  for (const auto& node : j.at("nodes")) {
    if (node.at("id").get<int>() != expect_id++)
      throw std::invalid_argument("poset json node ids must be consecutive");
    Involution inv = Involution::parse(node.at("cycles").get<std::string>(), n);
    std::vector<int> entries;
    for (const auto& row : node.at("rank_control"))
      for (const auto& v : row) entries.push_back(v.get<int>());
    nodes.push_back(
        PosetNode{std::move(inv), RankControlMatrix(n, std::move(entries)),
                  node.at("rank").get<int>()});
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& edge : j.at("covers")) {
    if (edge.size() != 2) throw std::invalid_argument("poset json cover must be a pair");
    covers.emplace_back(edge[0].get<int>(), edge[1].get<int>());
  }
  return OrbitPoset(n, std::move(nodes), std::move(covers));
}

ordered_json fpf_report_to_json(const FpfComparisonReport& report) {
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations)
    violations.push_back(ordered_json{
        {"a", v.a}, {"b", v.b}, {"orbit_leq", v.orbit_leq}, {"bruhat_geq", v.bruhat_geq}});
  return ordered_json{
      {"n", report.n}, {"checked_pairs", report.checked_pairs}, {"violations", std::move(violations)}};
}

}  // namespace asorbit
