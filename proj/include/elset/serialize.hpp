#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "elset/digraph.hpp"
#include "elset/elementary.hpp"
#include "elset/oracle.hpp"
#include "elset/parser.hpp"
#include "elset/semantics.hpp"

namespace elset {

inline nlohmann::json to_json(const AtomSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Atom a : set) out.push_back(a.name());
  return out;
}

// {"vertices": [...], "edges": [["u","v"], ...]} with both lists in
// canonical order.
inline nlohmann::json to_json(const Digraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({e.first.name(), e.second.name()});
  }
  return {{"vertices", to_json(graph.vertices())}, {"edges", std::move(edges)}};
}

inline std::string to_dot(const Digraph& graph, std::string_view name = "g") {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (Atom a : graph.vertices()) out += "  " + a.name() + ";\n";
  for (const Edge& e : graph.edges()) {
    out += "  " + e.first.name() + " -> " + e.second.name() + ";\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json to_json(const ElementarySubgraphTrace& trace) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : trace.levels) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : level) edges.push_back({e.first.name(), e.second.name()});
    levels.push_back(std::move(edges));
  }
  return {{"target", to_json(trace.target)},
          {"levels", std::move(levels)},
          {"final", to_json(trace.final)},
          {"strongly_connected", is_strongly_connected(trace.final)}};
}

// One digraph block per fixpoint level, for side-by-side inspection.
inline std::string to_dot(const ElementarySubgraphTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    out += to_dot(Digraph(trace.target, trace.levels[i]), "level" + std::to_string(i));
  }
  return out;
}

inline nlohmann::json to_json(const Rule& rule) {
  return {{"head", to_json(rule.head)},
          {"pos_body", to_json(rule.pos_body)},
          {"neg_body", to_json(rule.neg_body)},
          {"nneg_body", to_json(rule.nneg_body)}};
}

inline nlohmann::json to_json(const Program& program) {
  nlohmann::json rules = nlohmann::json::array();
  for (const Rule& r : program.rules()) rules.push_back(to_json(r));
  return {{"rules", std::move(rules)}, {"atoms", to_json(atoms_of(program))}};
}

// {"model", "is_model", "conditions": {a..e_prime}, "witnesses": {...}};
// witnesses carry only the conditions that failed with a counterexample set.
inline nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json conditions = {{"a", report.cond_a},         {"b", report.cond_b},
                               {"b_prime", report.cond_b_prime}, {"c", report.cond_c},
                               {"d", report.cond_d},         {"e", report.cond_e},
                               {"e_prime", report.cond_e_prime}};
  nlohmann::json witnesses = nlohmann::json::object();
  auto put = [&](const char* key, const std::optional<AtomSet>& witness) {
    if (witness) witnesses[key] = to_json(*witness);
  };
  put("b", report.witness_b);
  put("b_prime", report.witness_b_prime);
  put("c", report.witness_c);
  put("d", report.witness_d);
  put("e", report.witness_e);
  put("e_prime", report.witness_e_prime);
  return {{"model", to_json(report.model)},
          {"is_model", report.is_model},
          {"conditions", std::move(conditions)},
          {"witnesses", std::move(witnesses)}};
}

inline nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::object();
  for (const SuiteCheckStats& c : report.checks) {
    checks[c.name] = {{"passes", c.passes}, {"failures", c.failures}};
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const SuiteFailure& f : report.failures) {
    failures.push_back({{"check", f.check}, {"program", f.program_text}, {"detail", f.detail}});
  }
  return {{"seed", report.seed},
          {"trials", report.trials},
          {"checks", std::move(checks)},
          {"failures", std::move(failures)},
          {"all_passed", report.all_passed()}};
}

}  // namespace elset
