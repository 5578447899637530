#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elset/elementary.hpp"
#include "elset/formula.hpp"
#include "elset/loops.hpp"
#include "elset/parser.hpp"

namespace elset {

namespace detail {

// X |= B,F: positive body inside X, negated atoms outside, doubly-negated
// atoms inside. Classical satisfaction reads "not not a" the same way.
inline bool body_satisfied(const Rule& rule, const AtomSet& x) {
  return rule.pos_body.subset_of(x) && !rule.neg_body.intersects(x) && rule.nneg_body.subset_of(x);
}

inline bool satisfies_rule(const Rule& rule, const AtomSet& x) {
  return !body_satisfied(rule, x) || rule.head.intersects(x);
}

inline bool satisfies_rules(const Program& program, const AtomSet& x) {
  for (const Rule& r : program.rules()) {
    if (!satisfies_rule(r, x)) return false;
  }
  return true;
}

}  // namespace detail

// Classical satisfaction of every rule read as an implication.
inline bool satisfies_program(const Program& program, const AtomSet& x) {
  if (!x.subset_of(atoms_of(program))) {
    throw UnknownAtom("interpretation contains atoms not occurring in the program");
  }
  return detail::satisfies_rules(program, x);
}

// ES(Y): disjunction of B ∧ F ∧ (¬a for a in head\Y) over the rules whose
// head meets Y and whose positive body misses Y — the rules able to support
// Y from outside. Disjuncts follow program order. For nondisjunctive
// programs head\Y is empty and this is exactly the disjunction of B ∧ F.
inline Formula external_support_formula(const Program& program, const AtomSet& y) {
  if (y.empty()) throw EmptyTarget("external support formula needs a nonempty target");
  std::vector<Formula> disjuncts;
  for (const Rule& r : program.rules()) {
    if (!r.head.intersects(y) || r.pos_body.intersects(y)) continue;
    std::vector<Formula> parts;
    for (Atom a : r.pos_body) parts.push_back(Formula::atom(a));
    for (Atom a : r.neg_body) parts.push_back(Formula::negation(Formula::atom(a)));
    for (Atom a : r.nneg_body) {
      parts.push_back(Formula::negation(Formula::negation(Formula::atom(a))));
    }
    for (Atom a : set_difference(r.head, y)) {
      parts.push_back(Formula::negation(Formula::atom(a)));
    }
    disjuncts.push_back(Formula::conjunction(std::move(parts)));
  }
  return Formula::disjunction(std::move(disjuncts));
}

// LF(Y): conjunction of Y's atoms implies ES(Y).
inline Formula loop_formula(const Program& program, const AtomSet& y) {
  if (y.empty()) throw EmptyTarget("loop formula needs a nonempty target");
  std::vector<Formula> antecedent;
  for (Atom a : y) antecedent.push_back(Formula::atom(a));
  return Formula::implication(Formula::conjunction(std::move(antecedent)),
                              external_support_formula(program, y));
}

// Y is unfounded w.r.t. X iff X does not satisfy ES(Y).
inline bool is_unfounded(const Program& program, const AtomSet& y, const AtomSet& x) {
  return !eval(external_support_formula(program, y), x);
}

// Relevant part of a nondisjunctive program w.r.t. X: the rules whose body
// X satisfies.
inline Program relevant_program(const Program& program, const AtomSet& x) {
  if (classify(program) != Mode::Nondisjunctive) {
    throw NotNondisjunctive("the X-relevant program is defined for nondisjunctive programs");
  }
  std::vector<Rule> kept;
  for (const Rule& r : program.rules()) {
    if (detail::body_satisfied(r, x)) kept.push_back(r);
  }
  return make_program(std::move(kept), Mode::Nondisjunctive);
}

// Disjunctive refinement: rules whose body X satisfies and whose extra head
// atoms (outside Y) X avoids — the rules that can support Y w.r.t. X.
inline Program relevant_program_disj(const Program& program, const AtomSet& x, const AtomSet& y) {
  std::vector<Rule> kept;
  for (const Rule& r : program.rules()) {
    if (detail::body_satisfied(r, x) && !x.intersects(set_difference(r.head, y))) {
      kept.push_back(r);
    }
  }
  return make_program(std::move(kept), Mode::Disjunctive);
}

namespace detail {

// Elementariness of `y` for a subprogram: false when y's atoms do not all
// occur there. Uses the polynomial decider when it applies.
inline bool elementary_for_subprogram(const Program& sub, const AtomSet& y) {
  if (y.empty() || !y.subset_of(atoms_of(sub))) return false;
  if (classify(sub) == Mode::Nondisjunctive || is_head_cycle_free(sub)) {
    return is_elementary_fast(sub, y);
  }
  return is_elementary_bruteforce(sub, y);
}

}  // namespace detail

// Elementarily unfounded: an unfounded singleton, or a set that is both
// elementary for the relevant program (nondisjunctive: w.r.t. X;
// disjunctive: w.r.t. X and Y) and unfounded w.r.t. X.
inline bool is_elementarily_unfounded(const Program& program, const AtomSet& y,
                                      const AtomSet& x) {
  if (y.empty()) throw EmptyTarget("elementarily-unfounded test needs a nonempty target");
  if (!y.subset_of(atoms_of(program))) {
    throw UnknownAtom("target contains atoms not occurring in the program");
  }
  if (y.size() == 1) return is_unfounded(program, y, x);
  const Program relevant = classify(program) == Mode::Nondisjunctive
                               ? relevant_program(program, x)
                               : relevant_program_disj(program, x, y);
  return detail::elementary_for_subprogram(relevant, y) && is_unfounded(program, y, x);
}

// All elementarily unfounded sets w.r.t. X, canonical order. By the
// minimality correspondence these are exactly the minimal nonempty
// unfounded sets, and they form an antichain.
inline std::vector<AtomSet> enumerate_elementarily_unfounded(const Program& program,
                                                             const AtomSet& x) {
  std::vector<AtomSet> out;
  detail::for_each_nonempty_subset(atoms_of(program), [&](const AtomSet& y) {
    if (is_elementarily_unfounded(program, y, x)) out.push_back(y);
    return true;
  });
  return out;
}

// Reduct w.r.t. X: drop rules blocked by their negative part, strip the
// negative part from the rest. The result is a positive program.
inline Program reduct(const Program& program, const AtomSet& x) {
  std::vector<Rule> kept;
  for (const Rule& r : program.rules()) {
    if (r.neg_body.intersects(x) || !r.nneg_body.subset_of(x)) continue;
    kept.push_back(Rule{r.head, r.pos_body, {}, {}});
  }
  return make_program(std::move(kept), classify(program));
}

namespace detail {

// Least model of a positive nondisjunctive program (immediate-consequence
// fixpoint from the empty set).
inline AtomSet least_model_nondisjunctive(const Program& positive) {
  std::set<Atom> model;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : positive.rules()) {
      const Atom head = *r.head.begin();
      if (model.count(head)) continue;
      bool fires = true;
      for (Atom b : r.pos_body) {
        if (!model.count(b)) {
          fires = false;
          break;
        }
      }
      if (fires) {
        model.insert(head);
        changed = true;
      }
    }
  }
  return AtomSet(std::vector<Atom>(model.begin(), model.end()));
}

}  // namespace detail

// X is stable iff it satisfies the program and is a minimal model of the
// reduct; for nondisjunctive programs that means X is the least model of
// the reduct.
inline bool is_stable(const Program& program, const AtomSet& x) {
  if (!x.subset_of(atoms_of(program))) {
    throw UnknownAtom("interpretation contains atoms not occurring in the program");
  }
  if (!detail::satisfies_rules(program, x)) return false;
  const Program red = reduct(program, x);
  if (classify(program) == Mode::Nondisjunctive) {
    return x == detail::least_model_nondisjunctive(red);
  }
  if (!detail::satisfies_rules(red, x)) return false;
  bool minimal = true;
  detail::for_each_subset(x, [&](const AtomSet& smaller) {
    if (smaller.size() < x.size() && detail::satisfies_rules(red, smaller)) {
      minimal = false;
      return false;
    }
    return true;
  });
  return minimal;
}

inline constexpr std::size_t kDefaultModelBound = 16;
inline constexpr std::size_t kDefaultSubsetBound = 12;

// All models (subsets of the occurring atoms satisfying the program) in
// canonical order.
inline std::vector<AtomSet> enumerate_models(const Program& program,
                                             std::size_t bound = kDefaultModelBound) {
  if (atoms_of(program).size() > bound) {
    throw UniverseTooLarge("atom universe exceeds the exhaustive-enumeration bound");
  }
  std::vector<AtomSet> out;
  detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
    if (detail::satisfies_rules(program, x)) out.push_back(x);
    return true;
  });
  return out;
}

inline std::vector<AtomSet> enumerate_stable_models(const Program& program,
                                                    std::size_t bound = kDefaultModelBound) {
  if (atoms_of(program).size() > bound) {
    throw UniverseTooLarge("atom universe exceeds the exhaustive-enumeration bound");
  }
  std::vector<AtomSet> out;
  detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
    if (is_stable(program, x)) out.push_back(x);
    return true;
  });
  return out;
}

namespace detail {

inline std::vector<AtomSet> inclusion_maximal(const std::vector<AtomSet>& sets) {
  std::vector<AtomSet> out;
  for (const AtomSet& a : sets) {
    bool maximal = true;
    for (const AtomSet& b : sets) {
      if (a.proper_subset_of(b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

// Targets of the maximal-relevant-elementary condition: every singleton over
// the occurring atoms, plus the inclusion-maximal elementary sets of the
// relevant program (nondisjunctive), or the inclusion-maximal sets Z that
// are elementary for the Z-relative relevant program (disjunctive).
inline std::vector<AtomSet> maximal_relevant_elementary_targets(const Program& program,
                                                                const AtomSet& x) {
  std::set<AtomSet, CanonicalSetOrder> targets;
  for (Atom a : atoms_of(program)) targets.insert(AtomSet{a});
  std::vector<AtomSet> family;
  if (classify(program) == Mode::Nondisjunctive) {
    const Program relevant = relevant_program(program, x);
    family = enumerate_elementary_sets(relevant, std::size_t{1} << atoms_of(program).size());
  } else {
    for_each_nonempty_subset(atoms_of(program), [&](const AtomSet& z) {
      if (elementary_for_subprogram(relevant_program_disj(program, x, z), z)) {
        family.push_back(z);
      }
      return true;
    });
  }
  for (AtomSet& m : inclusion_maximal(family)) targets.insert(std::move(m));
  return {targets.begin(), targets.end()};
}

}  // namespace detail

// Per-model evaluation of the stability conditions: (a) stability, (b) loop
// formulas of all nonempty atom sets, (b') no nonempty unfounded subset,
// (c) loop formulas of all loops, (d) loop formulas of all elementary sets,
// (e) loop formulas of maximal relevant-elementary sets and singletons,
// (e') no elementarily unfounded subset. For a model of the program all
// seven agree.
struct ConditionReport {
  AtomSet model;
  bool is_model = false;
  bool cond_a = false;
  bool cond_b = false;
  bool cond_b_prime = false;
  bool cond_c = false;
  bool cond_d = false;
  bool cond_e = false;
  bool cond_e_prime = false;
  std::optional<AtomSet> witness_b;
  std::optional<AtomSet> witness_b_prime;
  std::optional<AtomSet> witness_c;
  std::optional<AtomSet> witness_d;
  std::optional<AtomSet> witness_e;
  std::optional<AtomSet> witness_e_prime;

  bool all_equal() const {
    return cond_a == cond_b && cond_b == cond_b_prime && cond_b_prime == cond_c &&
           cond_c == cond_d && cond_d == cond_e && cond_e == cond_e_prime;
  }
};

inline ConditionReport check_conditions(const Program& program, const AtomSet& x,
                                        std::size_t subset_bound = kDefaultSubsetBound) {
  const AtomSet& universe = atoms_of(program);
  if (!x.subset_of(universe)) {
    throw UnknownAtom("interpretation contains atoms not occurring in the program");
  }
  if (universe.size() > subset_bound) {
    throw UniverseTooLarge("atom universe exceeds the subset-sweep bound");
  }

  ConditionReport report;
  report.model = x;
  report.is_model = detail::satisfies_rules(program, x);
  report.cond_a = is_stable(program, x);

  auto first_lf_violation = [&](const std::vector<AtomSet>& targets) -> std::optional<AtomSet> {
    for (const AtomSet& y : targets) {
      if (!eval(loop_formula(program, y), x)) return y;
    }
    return std::nullopt;
  };

  // (b): all nonempty subsets of the occurring atoms
  detail::for_each_nonempty_subset(universe, [&](const AtomSet& y) {
    if (!eval(loop_formula(program, y), x)) {
      report.witness_b = y;
      return false;
    }
    return true;
  });
  report.cond_b = !report.witness_b.has_value();

  // (b'): no nonempty unfounded subset of X
  detail::for_each_nonempty_subset(x, [&](const AtomSet& y) {
    if (is_unfounded(program, y, x)) {
      report.witness_b_prime = y;
      return false;
    }
    return true;
  });
  report.cond_b_prime = !report.witness_b_prime.has_value();

  const std::size_t cap = std::size_t{1} << universe.size();
  report.witness_c = first_lf_violation(enumerate_loops(program, cap));
  report.cond_c = !report.witness_c.has_value();

  report.witness_d = first_lf_violation(enumerate_elementary_sets(program, cap));
  report.cond_d = !report.witness_d.has_value();

  report.witness_e = first_lf_violation(detail::maximal_relevant_elementary_targets(program, x));
  report.cond_e = !report.witness_e.has_value();

  // (e'): no elementarily unfounded subset of X
  detail::for_each_nonempty_subset(x, [&](const AtomSet& y) {
    if (is_elementarily_unfounded(program, y, x)) {
      report.witness_e_prime = y;
      return false;
    }
    return true;
  });
  report.cond_e_prime = !report.witness_e_prime.has_value();

  return report;
}

// Deliberately weakened variant that quantifies only over the inclusion-
// maximal elementary sets of the program itself. Not equivalent to
// stability; kept callable so the non-equivalence stays pinned by tests.
inline bool satisfies_maximal_elementary_formulas(const Program& program, const AtomSet& x) {
  const std::size_t cap = std::size_t{1} << atoms_of(program).size();
  for (const AtomSet& y : detail::inclusion_maximal(enumerate_elementary_sets(program, cap))) {
    if (!eval(loop_formula(program, y), x)) return false;
  }
  return true;
}

}  // namespace elset
