#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elset/elementary.hpp"
#include "elset/program.hpp"

namespace elset {

// A 3-CNF formula. Every clause holds exactly three signed literals
// (1-based variable indices, negative = negated); shorter input clauses are
// padded by repeating their last literal.
struct Cnf {
  int var_count = 0;
  std::vector<std::array<int, 3>> clauses;
};

namespace detail {

class DimacsScanner {
 public:
  explicit DimacsScanner(std::string_view text) : text_(text) {}

  struct Word {
    std::string_view value;  // empty at end of input
    int line;
    int column;
  };

  Word next() {
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == 'c' && at_word_start()) {
        // comment line
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      break;
    }
    const int line = line_;
    const int col = column_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    return {text_.substr(start, pos_ - start), line, col};
  }

 private:
  bool at_word_start() const {
    return pos_ + 1 >= text_.size() || std::isspace(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline int parse_int_word(const DimacsScanner::Word& word) {
  if (word.value.empty()) throw ParseError(word.line, word.column, "unexpected end of input");
  std::size_t i = word.value[0] == '-' ? 1 : 0;
  if (i == word.value.size()) throw ParseError(word.line, word.column, "expected an integer");
  long long value = 0;
  for (; i < word.value.size(); ++i) {
    const char c = word.value[i];
    if (c < '0' || c > '9') throw ParseError(word.line, word.column, "expected an integer");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(word.line, word.column, "integer too large");
  }
  return word.value[0] == '-' ? static_cast<int>(-value) : static_cast<int>(value);
}

}  // namespace detail

// DIMACS subset: optional `c` comment lines, one `p cnf VARS CLAUSES`
// header, then zero-terminated clauses. The declared clause count is not
// enforced; the actual clauses are taken. Clauses with fewer than three
// literals are padded by repeating the last one; more than three distinct
// literals is an error, and so is an empty clause.
inline Cnf parse_dimacs(std::string_view text) {
  detail::DimacsScanner scanner(text);
  auto word = scanner.next();
  if (word.value != "p") throw ParseError(word.line, word.column, "expected 'p cnf' header");
  word = scanner.next();
  if (word.value != "cnf") throw ParseError(word.line, word.column, "expected 'cnf' after 'p'");
  Cnf cnf;
  cnf.var_count = detail::parse_int_word(scanner.next());
  if (cnf.var_count < 0) throw ParseError(word.line, word.column, "negative variable count");
  const int declared_clauses = detail::parse_int_word(scanner.next());
  if (declared_clauses < 0) throw ParseError(word.line, word.column, "negative clause count");

  std::vector<int> literals;
  while (true) {
    word = scanner.next();
    if (word.value.empty()) {
      if (!literals.empty()) throw ParseError(word.line, word.column, "unterminated clause");
      break;
    }
    const int lit = detail::parse_int_word(word);
    if (lit == 0) {
      std::vector<int> distinct;
      for (int l : literals) {
        bool seen = false;
        for (int d : distinct) seen = seen || d == l;
        if (!seen) distinct.push_back(l);
      }
      if (distinct.empty()) throw ParseError(word.line, word.column, "empty clause");
      if (distinct.size() > 3) {
        throw ClauseTooLong("clause with more than three distinct literals");
      }
      while (distinct.size() < 3) distinct.push_back(distinct.back());
      cnf.clauses.push_back({distinct[0], distinct[1], distinct[2]});
      literals.clear();
    } else {
      if (lit < -cnf.var_count || lit > cnf.var_count) {
        throw ParseError(word.line, word.column, "literal out of range");
      }
      literals.push_back(lit);
    }
  }
  return cnf;
}

namespace detail {

inline Atom literal_atom(int literal) {
  const std::string index = std::to_string(literal > 0 ? literal : -literal);
  return Atom::make(literal > 0 ? "x" + index : "xbar" + index);
}

inline Atom complement_atom(int literal) { return literal_atom(-literal); }

}  // namespace detail

// The three subprograms of the unsatisfiability reduction, kept separate so
// their per-part properties can be exercised directly.
struct ReductionParts {
  Program variable_cover;   // forces non-outbound subsets to touch every variable
  Program literal_choice;   // forces them to avoid complementary pairs
  std::vector<Program> clause_guards;  // one per clause: forces clause satisfaction
  Program whole;
  AtomSet literal_atoms;    // the target set Y: both literal atoms per variable
};

inline ReductionParts build_reduction_parts(const Cnf& cnf) {
  if (cnf.var_count < 1) throw Error("reduction needs at least one variable");
  const int n = cnf.var_count;

  std::vector<Atom> atoms;
  for (int i = 1; i <= n; ++i) {
    atoms.push_back(detail::literal_atom(i));
    atoms.push_back(detail::literal_atom(-i));
  }

  // x_i <- x_{i+1}, xbar_{i+1} and the xbar_i twin, indices cyclic.
  std::vector<Rule> cover_rules;
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? 1 : i + 1;
    const AtomSet body{detail::literal_atom(next), detail::literal_atom(-next)};
    cover_rules.push_back(make_rule(AtomSet{detail::literal_atom(i)}, body));
    cover_rules.push_back(make_rule(AtomSet{detail::literal_atom(-i)}, body));
  }

  // x_i ; xbar_i <- x_{i+1} and x_i ; xbar_i <- xbar_{i+1}, indices cyclic.
  std::vector<Rule> choice_rules;
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? 1 : i + 1;
    const AtomSet head{detail::literal_atom(i), detail::literal_atom(-i)};
    choice_rules.push_back(make_rule(head, AtomSet{detail::literal_atom(next)}));
    choice_rules.push_back(make_rule(head, AtomSet{detail::literal_atom(-next)}));
  }

  // Per clause l1 | l2 | l3: the complements of two literals, supported by
  // the third. Duplicate head atoms from padded clauses collapse.
  ReductionParts parts;
  std::vector<Rule> all_rules = cover_rules;
  all_rules.insert(all_rules.end(), choice_rules.begin(), choice_rules.end());
  for (const auto& clause : cnf.clauses) {
    std::vector<Rule> guard;
    guard.push_back(make_rule(
        AtomSet{detail::complement_atom(clause[0]), detail::complement_atom(clause[1])},
        AtomSet{detail::literal_atom(clause[2])}));
    guard.push_back(make_rule(
        AtomSet{detail::complement_atom(clause[0]), detail::complement_atom(clause[2])},
        AtomSet{detail::literal_atom(clause[1])}));
    guard.push_back(make_rule(
        AtomSet{detail::complement_atom(clause[1]), detail::complement_atom(clause[2])},
        AtomSet{detail::literal_atom(clause[0])}));
    all_rules.insert(all_rules.end(), guard.begin(), guard.end());
    parts.clause_guards.push_back(make_program(std::move(guard), Mode::Disjunctive));
  }

  parts.variable_cover = make_program(std::move(cover_rules), Mode::Disjunctive);
  parts.literal_choice = make_program(std::move(choice_rules), Mode::Disjunctive);
  parts.whole = make_program(std::move(all_rules), Mode::Disjunctive);
  parts.literal_atoms = AtomSet(std::move(atoms));
  return parts;
}

// The reduction program and its target set Y. Y is elementary for the
// program iff the formula is unsatisfiable.
inline std::pair<Program, AtomSet> build_reduction(const Cnf& cnf) {
  ReductionParts parts = build_reduction_parts(cnf);
  return {std::move(parts.whole), std::move(parts.literal_atoms)};
}

// Exhaustive assignment sweep.
inline bool brute_force_sat(const Cnf& cnf) {
  if (cnf.var_count > 20) throw TooManyVariables("brute-force SAT is limited to 20 variables");
  const std::uint32_t assignments = std::uint32_t{1} << cnf.var_count;
  for (std::uint32_t mask = 0; mask < assignments; ++mask) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool clause_true = false;
      for (int lit : clause) {
        const int var = lit > 0 ? lit : -lit;
        const bool value = (mask >> (var - 1)) & 1u;
        if (lit > 0 ? value : !value) {
          clause_true = true;
          break;
        }
      }
      if (!clause_true) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// End-to-end check of the reduction: the target set is elementary (by the
// definition-level decider) exactly when the formula has no model (by the
// assignment sweep).
inline bool verify_reduction(const Cnf& cnf) {
  if (2 * cnf.var_count > 12) {
    throw TooLarge("reduction verification is limited to six variables");
  }
  const auto [program, target] = build_reduction(cnf);
  return is_elementary_bruteforce(program, target) == !brute_force_sat(cnf);
}

}  // namespace elset
