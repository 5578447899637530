#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "elset/generator.hpp"
#include "elset/semantics.hpp"

namespace elset {

// Reference enumeration of the minimal nonempty unfounded sets: sweep every
// nonempty subset of the occurring atoms in increasing-cardinality order,
// keep the unfounded ones that contain no previously kept set. Built only
// on the unfoundedness primitive, independent of the elementary machinery.
inline std::vector<AtomSet> oracle_minimal_unfounded(const Program& program, const AtomSet& x,
                                                     std::size_t bound = kDefaultModelBound) {
  if (atoms_of(program).size() > bound) {
    throw UniverseTooLarge("atom universe exceeds the exhaustive-enumeration bound");
  }
  std::vector<AtomSet> minimal;
  detail::for_each_nonempty_subset(atoms_of(program), [&](const AtomSet& y) {
    if (!is_unfounded(program, y, x)) return true;
    for (const AtomSet& kept : minimal) {
      if (kept.subset_of(y)) return true;  // contains a smaller unfounded set
    }
    minimal.push_back(y);
    return true;
  });
  return minimal;
}

// The six desk fixtures that are always run through the equivalence suite.
inline const std::vector<std::pair<std::string, Program>>& suite_fixtures() {
  static const std::vector<std::pair<std::string, Program>> fixtures = {
      {"split-feedback", parse_program_auto("p :- not s. p :- r. q :- r. r :- p, q.")},
      {"self-blocking", parse_program_auto("p :- q, not p. q :- p, not p. p.")},
      {"mutual-support", parse_program_auto("p :- q, not r. q :- p, not r.")},
      {"interlocked-cycle",
       parse_program_auto("p :- p, q. p :- r. r :- p. q :- p, q. q :- r. r :- q.")},
      {"head-cycle-pair", parse_program_auto("p ; q :- p. p :- q. p :- not r.")},
      {"disjunctive-triangle", parse_program_auto("p ; q :- r. p ; r :- q. q ; r :- p.")},
  };
  return fixtures;
}

struct SuiteCheckStats {
  std::string name;
  int passes = 0;
  int failures = 0;
};

struct SuiteFailure {
  std::string check;
  std::string program_text;
  std::string detail;
};

// Test-only seams: a hook replaces the production comparator in the
// corresponding check, so the harness can prove it reports counterexamples.
struct SuiteHooks {
  std::function<bool(const Program&, const AtomSet&)> elementary_fast;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<SuiteCheckStats> checks;
  std::vector<SuiteFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

namespace detail {

class SuiteRunner {
 public:
  SuiteRunner(const SuiteHooks& hooks, SuiteReport& report) : hooks_(hooks), report_(report) {
    for (const char* name : {"theorem1-ladder", "elementary-fast-vs-bruteforce",
                             "loop-definitions", "minimal-unfounded", "gs-elementary"}) {
      report_.checks.push_back({name, 0, 0});
    }
  }

  void run(const Program& program) {
    const std::string text = render_program(program);
    record(0, check_ladder(program), text);
    record(1, check_fast_vs_bruteforce(program), text);
    record(2, check_loop_definitions(program), text);
    record(3, check_minimal_unfounded(program), text);
    record(4, check_gs(program), text);
  }

 private:
  // empty detail = pass; checks return the first counterexample found
  void record(std::size_t index, const std::string& detail, const std::string& text) {
    if (detail == "skipped") return;
    if (detail.empty()) {
      ++report_.checks[index].passes;
    } else {
      ++report_.checks[index].failures;
      report_.failures.push_back({report_.checks[index].name, text, detail});
    }
  }

  std::string check_ladder(const Program& program) {
    for (const AtomSet& model : enumerate_models(program)) {
      const ConditionReport r = check_conditions(program, model);
      if (!r.all_equal()) {
        return "conditions disagree for model " + render_atomset(model) + ": a=" +
               std::to_string(r.cond_a) + " b=" + std::to_string(r.cond_b) +
               " b'=" + std::to_string(r.cond_b_prime) + " c=" + std::to_string(r.cond_c) +
               " d=" + std::to_string(r.cond_d) + " e=" + std::to_string(r.cond_e) +
               " e'=" + std::to_string(r.cond_e_prime);
      }
    }
    return "";
  }

  std::string check_fast_vs_bruteforce(const Program& program) {
    if (classify(program) == Mode::Disjunctive && !is_head_cycle_free(program)) return "skipped";
    std::function<bool(const Program&, const AtomSet&)> fast = hooks_.elementary_fast;
    if (!fast) {
      fast = [](const Program& p, const AtomSet& y) { return is_elementary_fast(p, y); };
    }
    std::string detail;
    for_each_nonempty_subset(atoms_of(program), [&](const AtomSet& y) {
      if (fast(program, y) != is_elementary_bruteforce(program, y)) {
        detail = "deciders disagree on " + render_atomset(y);
        return false;
      }
      return true;
    });
    return detail;
  }

  std::string check_loop_definitions(const Program& program) {
    std::string detail;
    for_each_nonempty_subset(atoms_of(program), [&](const AtomSet& y) {
      if (is_loop(program, y) != is_loop_alt(program, y)) {
        detail = "loop definitions disagree on " + render_atomset(y);
        return false;
      }
      return true;
    });
    return detail;
  }

  std::string check_minimal_unfounded(const Program& program) {
    std::string detail;
    for_each_subset(atoms_of(program), [&](const AtomSet& x) {
      const std::vector<AtomSet> enumerated = enumerate_elementarily_unfounded(program, x);
      if (enumerated != oracle_minimal_unfounded(program, x)) {
        detail = "elementarily-unfounded sets differ from minimal unfounded sets w.r.t. " +
                 render_atomset(x);
        return false;
      }
      for (std::size_t i = 0; i < enumerated.size(); ++i) {
        for (std::size_t j = 0; j < enumerated.size(); ++j) {
          if (i != j && enumerated[i].proper_subset_of(enumerated[j])) {
            detail = "antichain violated w.r.t. " + render_atomset(x);
            return false;
          }
        }
      }
      return true;
    });
    return detail;
  }

  std::string check_gs(const Program& program) {
    if (classify(program) != Mode::Nondisjunctive) return "skipped";
    const std::size_t cap = std::size_t{1} << atoms_of(program).size();
    const Digraph graph = dependency_graph(program);
    for (const AtomSet& loop : enumerate_loops(program, cap)) {
      if (!is_nontrivial_loop(graph, loop)) continue;
      if (is_gs_elementary_loop(program, loop) != is_elementary_bruteforce(program, loop)) {
        return "GS and elementary deciders disagree on " + render_atomset(loop);
      }
    }
    return "";
  }

  const SuiteHooks& hooks_;
  SuiteReport& report_;
};

}  // namespace detail

// Runs the equivalence checks on the six fixtures and then on `trials`
// random programs drawn from `params` (trial i uses seed params.seed + i).
// Failures are data, not errors; the report carries the first
// counterexample per failing (program, check) pair.
inline SuiteReport run_equivalence_suite(const GenParams& params, int trials,
                                         const SuiteHooks& hooks = {}) {
  SuiteReport report;
  report.seed = params.seed;
  report.trials = trials;
  detail::SuiteRunner runner(hooks, report);
  for (const auto& [name, fixture] : suite_fixtures()) {
    (void)name;
    runner.run(fixture);
  }
  for (int t = 0; t < trials; ++t) {
    GenParams trial = params;
    trial.seed = params.seed + static_cast<std::uint64_t>(t);
    runner.run(gen_random_program(trial));
  }
  return report;
}

}  // namespace elset
