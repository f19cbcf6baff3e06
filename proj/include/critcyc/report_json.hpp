#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "critcyc/bounds.hpp"
#include "critcyc/decomposition.hpp"

namespace critcyc {

using ordered_json = nlohmann::ordered_json;

inline const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

inline ordered_json bound_to_json(const BoundReport& r) {
  ordered_json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["k"] = r.k;
  j["m"] = r.m;
  j["circumference"] = r.circumference;
  j["longest_path"] = r.longest_path;
  j["thm1_lower"] = r.thm1_lower;
  j["dirac_lower"] = r.dirac_lower;
  j["gallai_upper"] = r.gallai_upper;
  j["gallai_upper_variant"] = r.gallai_upper_variant;
  if (r.path_upper.has_value()) j["path_upper"] = *r.path_upper;
  ordered_json checks;
  checks["thm1_lower"] = pass_fail(r.thm1_pass);
  checks["dirac_lower"] = pass_fail(r.dirac_pass);
  checks["gallai_upper"] = pass_fail(r.gallai_pass);
  checks["gallai_upper_variant"] = pass_fail(r.gallai_variant_pass);
  if (r.path_pass.has_value()) checks["path_upper"] = pass_fail(*r.path_pass);
  j["checks"] = checks;
  j["status"] = pass_fail(r.all_pass());
  return j;
}

inline std::string bounds_json(const std::vector<BoundReport>& reports) {
  ordered_json j = ordered_json::array();
  for (const BoundReport& r : reports) j.push_back(bound_to_json(r));
  return j.dump(2) + "\n";
}

inline std::string cycle_json(const Graph& g, int k, const CycleWitness& w) {
  ordered_json j;
  j["n"] = g.n();
  j["k"] = k;
  j["m"] = g.m();
  j["length"] = w.length();
  j["claimed_length"] = w.claimed_length;
  j["cycle"] = w.vertices;
  j["trace"] = w.trace;
  return j.dump(2) + "\n";
}

inline std::string coro2_json(const Coro2Report& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["precondition"] = r.precondition_ok ? "ok" : r.note;
  if (r.precondition_ok) {
    j["cycle_length"] = r.cycle.length();
    j["cycle"] = r.cycle.vertices;
    j["odd_cycle_length"] = r.odd_cycle.length();
    j["odd_cycle"] = r.odd_cycle.vertices;
    j["odd_guarantee"] = r.odd_cycle.claimed_length;
    j["odd_floor"] = r.odd_floor;
    j["status"] = pass_fail(r.bound_pass);
  } else {
    j["status"] = "precondition-failed";
  }
  return j.dump(2) + "\n";
}

inline std::string criticality_json(const Graph& g, int k, const CriticalityReport& report,
                                    const std::string& reason) {
  ordered_json j;
  j["n"] = g.n();
  j["k"] = k;
  j["m"] = g.m();
  j["critical"] = report.is_critical;
  if (report.is_critical) {
    j["certified_edge_deletions"] = static_cast<long long>(report.per_edge.size());
  } else {
    j["reason"] = reason;
    if (report.chromatic_witness.has_value()) {
      ordered_json w;
      for (auto [v, c] : report.chromatic_witness->assignment) w[std::to_string(v)] = c;
      j["coloring_with_k"] = w;
    }
  }
  return j.dump(2) + "\n";
}

inline std::string decomposition_json(const Graph& g, int k, const StandardDecomposition& dec,
                                      const ValidationReport& validation) {
  ordered_json j;
  j["n"] = g.n();
  j["k"] = k;
  j["m"] = g.m();
  j["node_count"] = static_cast<long long>(dec.nodes().size());
  ordered_json tree = ordered_json::array();
  for (int t : dec.nodes())
    for (int c : dec.tree.children(t)) tree.push_back(std::vector<int>{t, c});
  j["tree_edges"] = tree;
  ordered_json nodes = ordered_json::array();
  for (const NodeChecks& checks : validation.nodes) {
    ordered_json node;
    node["id"] = checks.node;
    node["bag"] = std::vector<int>(checks.bag.begin(), checks.bag.end());
    const Graph& torso_graph = dec.torsos.at(checks.node);
    node["torso_edges"] = torso_graph.m();
    node["cycle_torso"] = is_cycle_graph(torso_graph);
    node["effective_weight"] = checks.effective_weight;
    ordered_json virtuals = ordered_json::array();
    auto it = dec.virtual_edges.find(checks.node);
    if (it != dec.virtual_edges.end())
      for (const VirtualEdge& e : it->second) {
        ordered_json ve;
        ve["u"] = e.u;
        ve["v"] = e.v;
        ve["neighbor"] = e.neighbor;
        ve["class"] = e.classification == EdgeClass::Additive      ? "additive"
                      : e.classification == EdgeClass::Contractive ? "contractive"
                                                                   : "unclassified";
        virtuals.push_back(ve);
      }
    node["virtual_edges"] = virtuals;
    ordered_json flags;
    flags["adhesions_nonadjacent"] = pass_fail(checks.adhesions_nonadjacent);
    flags["adhesions_distinct"] = pass_fail(checks.adhesions_distinct);
    flags["torso_three_connected"] = pass_fail(checks.torso_three_connected);
    flags["contractive_forest"] = pass_fail(checks.contractive_forest);
    flags["nucleus_critical"] = pass_fail(checks.nucleus_critical);
    flags["edges_bound"] = pass_fail(checks.edges_bound);
    flags["degree_bound"] = pass_fail(checks.degree_bound);
    flags["nucleus_at_least_induced"] = pass_fail(checks.nucleus_at_least_induced);
    flags["torso_path_bound"] = pass_fail(checks.torso_path_bound);
    node["checks"] = flags;
    if (!checks.notes.empty()) node["notes"] = checks.notes;
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  j["failing_nodes"] = validation.failing_nodes();
  j["status"] = pass_fail(validation.all_pass);
  return j.dump(2) + "\n";
}

}  // namespace critcyc
