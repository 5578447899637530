#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elset/atoms.hpp"

namespace elset {

// Immutable propositional formula over {atom, true, false, -, &, |, ->}.
// Connectives normalize only at the edges: an empty conjunction is `true`,
// an empty disjunction is `false`, and one-element connectives collapse to
// their argument. No other simplification, so a formula keeps the exact
// shape it was built with.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies };

  static Formula truth() { return Formula(Kind::True, std::nullopt, {}); }
  static Formula falsity() { return Formula(Kind::False, std::nullopt, {}); }
  static Formula atom(Atom a) { return Formula(Kind::Atom, a, {}); }
  static Formula negation(Formula f) { return Formula(Kind::Not, std::nullopt, {std::move(f)}); }

  static Formula conjunction(std::vector<Formula> parts) {
    if (parts.empty()) return truth();
    if (parts.size() == 1) return std::move(parts.front());
    return Formula(Kind::And, std::nullopt, std::move(parts));
  }

  static Formula disjunction(std::vector<Formula> parts) {
    if (parts.empty()) return falsity();
    if (parts.size() == 1) return std::move(parts.front());
    return Formula(Kind::Or, std::nullopt, std::move(parts));
  }

  static Formula implication(Formula lhs, Formula rhs) {
    return Formula(Kind::Implies, std::nullopt, {std::move(lhs), std::move(rhs)});
  }

  Kind kind() const { return node_->kind; }
  Atom atom_value() const { return *node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Kind::Atom) return a.atom_value() == b.atom_value();
    return a.children() == b.children();
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::optional<Atom> atom;
    std::vector<Formula> children;
  };

  Formula(Kind kind, std::optional<Atom> atom, std::vector<Formula> children)
      : node_(std::make_shared<const Node>(Node{kind, atom, std::move(children)})) {}

  std::shared_ptr<const Node> node_;
};

// Classical truth evaluation; atoms outside `interpretation` are false.
inline bool eval(const Formula& f, const AtomSet& interpretation) {
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom: return interpretation.contains(f.atom_value());
    case Formula::Kind::Not: return !eval(f.children()[0], interpretation);
    case Formula::Kind::And:
      for (const Formula& c : f.children()) {
        if (!eval(c, interpretation)) return false;
      }
      return true;
    case Formula::Kind::Or:
      for (const Formula& c : f.children()) {
        if (eval(c, interpretation)) return true;
      }
      return false;
    case Formula::Kind::Implies:
      return !eval(f.children()[0], interpretation) || eval(f.children()[1], interpretation);
  }
  return false;  // unreachable
}

namespace detail {

// Binding strength, loosest first: -> | & -. Parentheses are emitted only
// when a child binds more loosely than its context requires.
inline int formula_precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

inline void render_formula_into(const Formula& f, int min_precedence, std::string& out) {
  const int prec = formula_precedence(f.kind());
  const bool parens = prec < min_precedence;
  if (parens) out += "(";
  switch (f.kind()) {
    case Formula::Kind::True: out += "true"; break;
    case Formula::Kind::False: out += "false"; break;
    case Formula::Kind::Atom: out += f.atom_value().name(); break;
    case Formula::Kind::Not:
      out += "-";
      render_formula_into(f.children()[0], prec, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* sep = f.kind() == Formula::Kind::And ? " & " : " | ";
      bool first = true;
      for (const Formula& c : f.children()) {
        if (!first) out += sep;
        render_formula_into(c, prec, out);
        first = false;
      }
      break;
    }
    case Formula::Kind::Implies:
      // right-associative
      render_formula_into(f.children()[0], prec + 1, out);
      out += " -> ";
      render_formula_into(f.children()[1], prec, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace detail

inline std::string render_formula(const Formula& f) {
  std::string out;
  detail::render_formula_into(f, 0, out);
  return out;
}

}  // namespace elset
