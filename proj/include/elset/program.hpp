#pragma once

#include <span>
#include <utility>
#include <vector>

#include "elset/atoms.hpp"
#include "elset/errors.hpp"

namespace elset {

enum class Mode { Nondisjunctive, Disjunctive };

// One ground rule
//
//   head_1 ; ... ; head_k :- pos..., not neg..., not not nneg...
//
// All four parts are canonical atom sets. An empty head is a constraint and
// is only accepted in disjunctive mode.
struct Rule {
  AtomSet head;
  AtomSet pos_body;
  AtomSet neg_body;
  AtomSet nneg_body;

  friend bool operator==(const Rule&, const Rule&) = default;
};

inline Rule make_rule(AtomSet head, AtomSet pos = {}, AtomSet neg = {}, AtomSet nneg = {}) {
  return Rule{std::move(head), std::move(pos), std::move(neg), std::move(nneg)};
}

// A finite sequence of rules plus the set of atoms occurring in them.
// Immutable after construction; classification is always derived from the
// rule shapes, never stored.
class Program {
 public:
  Program() = default;

  const std::vector<Rule>& rules() const { return rules_; }
  const AtomSet& atom_universe() const { return universe_; }

  friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }
  friend bool operator!=(const Program& a, const Program& b) { return !(a == b); }

 private:
  Program(std::vector<Rule> rules, AtomSet universe)
      : rules_(std::move(rules)), universe_(std::move(universe)) {}

  friend Program make_program(std::vector<Rule>, Mode);

  std::vector<Rule> rules_;
  AtomSet universe_;
};

// Validates the rules against `mode` and computes the atom universe.
// Nondisjunctive mode requires exactly one head atom and no double negation.
inline Program make_program(std::vector<Rule> rules, Mode mode) {
  std::vector<Atom> all;
  for (const Rule& r : rules) {
    if (mode == Mode::Nondisjunctive) {
      if (r.head.empty()) {
        throw EmptyHeadInNondisjunctive("constraint (empty head) requires disjunctive mode");
      }
      if (r.head.size() > 1) {
        throw ModeViolation("disjunctive head in nondisjunctive mode");
      }
      if (!r.nneg_body.empty()) {
        throw ModeViolation("double negation in nondisjunctive mode");
      }
    }
    for (const AtomSet* part : {&r.head, &r.pos_body, &r.neg_body, &r.nneg_body}) {
      all.insert(all.end(), part->begin(), part->end());
    }
  }
  return Program(std::move(rules), AtomSet(std::move(all)));
}

inline const AtomSet& atoms_of(const Program& program) { return program.atom_universe(); }

inline Mode detect_mode(std::span<const Rule> rules) {
  for (const Rule& r : rules) {
    if (r.head.size() != 1 || !r.nneg_body.empty()) return Mode::Disjunctive;
  }
  return Mode::Nondisjunctive;
}

// Nondisjunctive iff every head is a singleton and no rule uses "not not".
inline Mode classify(const Program& program) { return detect_mode(program.rules()); }

}  // namespace elset
