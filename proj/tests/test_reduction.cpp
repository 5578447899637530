#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <vector>

#include "fixtures.hpp"

using namespace elset;

namespace {

// Independent SAT route: clause-set splitting with simplification, no
// assignment enumeration.
bool splitting_sat(std::vector<std::vector<int>> clauses) {
  if (clauses.empty()) return true;
  for (const auto& clause : clauses) {
    if (clause.empty()) return false;
  }
  const int pivot = clauses.front().front();
  for (const int value : {pivot, -pivot}) {
    std::vector<std::vector<int>> simplified;
    for (const auto& clause : clauses) {
      bool satisfied = false;
      std::vector<int> rest;
      for (int lit : clause) {
        if (lit == value) {
          satisfied = true;
          break;
        }
        if (lit != -value) rest.push_back(lit);
      }
      if (!satisfied) simplified.push_back(std::move(rest));
    }
    if (splitting_sat(std::move(simplified))) return true;
  }
  return false;
}

bool splitting_sat(const Cnf& cnf) {
  std::vector<std::vector<int>> clauses;
  for (const auto& c : cnf.clauses) clauses.push_back({c[0], c[1], c[2]});
  return splitting_sat(std::move(clauses));
}

Cnf random_cnf(std::mt19937_64& rng, int vars, int max_clauses) {
  Cnf cnf;
  cnf.var_count = vars;
  const int clauses = static_cast<int>(rng() % static_cast<std::uint64_t>(max_clauses + 1));
  for (int i = 0; i < clauses; ++i) {
    std::array<int, 3> clause{};
    for (int j = 0; j < 3; ++j) {
      const int var = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(vars));
      clause[j] = rng() % 2 == 0 ? var : -var;
    }
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

}  // namespace

TEST(Dimacs, PaddingAndBasics) {
  const Cnf cnf = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(cnf.var_count, 1);
  ASSERT_EQ(cnf.clauses.size(), 2u);
  EXPECT_EQ(cnf.clauses[0], (std::array<int, 3>{1, 1, 1}));
  EXPECT_EQ(cnf.clauses[1], (std::array<int, 3>{-1, -1, -1}));

  const Cnf empty = parse_dimacs("c nothing here\np cnf 4 0\n");
  EXPECT_EQ(empty.var_count, 4);
  EXPECT_TRUE(empty.clauses.empty());

  const Cnf two = parse_dimacs("p cnf 3 1\nc inline comment\n1 -2 0");
  EXPECT_EQ(two.clauses[0], (std::array<int, 3>{1, -2, -2}));
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs(""), ParseError);
  EXPECT_THROW(parse_dimacs("cnf 1 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n1 2 0\n"), ParseError);    // out of range
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n1\n"), ParseError);        // unterminated
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n0\n"), ParseError);        // empty clause
  EXPECT_THROW(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), ClauseTooLong);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\nx 0\n"), ParseError);
}

TEST(Dimacs, RepeatedLiteralsDoNotCountAsDistinct) {
  const Cnf cnf = parse_dimacs("p cnf 2 1\n1 1 2 2 0\n");
  EXPECT_EQ(cnf.clauses[0], (std::array<int, 3>{1, 2, 2}));
}

TEST(Reduction, PartSizes) {
  Cnf cnf;
  cnf.var_count = 2;
  const ReductionParts parts = build_reduction_parts(cnf);
  EXPECT_EQ(parts.variable_cover.rules().size(), 4u);
  EXPECT_EQ(parts.literal_choice.rules().size(), 4u);
  EXPECT_EQ(parts.whole.rules().size(), 8u);
  EXPECT_EQ(parts.literal_atoms, fixtures::set("x1,x2,xbar1,xbar2"));

  cnf.clauses.push_back({1, 2, 2});
  EXPECT_EQ(build_reduction_parts(cnf).whole.rules().size(), 11u);
}

TEST(Reduction, ClauseRulesPinned) {
  Cnf cnf;
  cnf.var_count = 3;
  cnf.clauses.push_back({1, 2, 3});
  const ReductionParts parts = build_reduction_parts(cnf);
  ASSERT_EQ(parts.clause_guards.size(), 1u);
  EXPECT_EQ(render_program(parts.clause_guards[0]),
            "xbar1 ; xbar2 :- x3.\nxbar1 ; xbar3 :- x2.\nxbar2 ; xbar3 :- x1.\n");
}

TEST(Reduction, SingleVariableDegenerateCycle) {
  Cnf cnf;
  cnf.var_count = 1;
  const ReductionParts parts = build_reduction_parts(cnf);
  EXPECT_EQ(render_program(parts.variable_cover),
            "x1 :- x1, xbar1.\nxbar1 :- x1, xbar1.\n");
  EXPECT_EQ(render_program(parts.literal_choice),
            "x1 ; xbar1 :- x1.\nx1 ; xbar1 :- xbar1.\n");
}

TEST(Reduction, NeedsAVariable) {
  Cnf cnf;
  EXPECT_THROW(build_reduction_parts(cnf), Error);
}

TEST(BruteForceSat, Basics) {
  EXPECT_FALSE(brute_force_sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")));
  EXPECT_TRUE(brute_force_sat(parse_dimacs("p cnf 3 0\n")));
  Cnf wide;
  wide.var_count = 21;
  EXPECT_THROW(brute_force_sat(wide), TooManyVariables);
}

TEST(BruteForceSat, AgreesWithSplittingSolver) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Cnf cnf = random_cnf(rng, 4, 12);
    EXPECT_EQ(brute_force_sat(cnf), splitting_sat(cnf));
  }
}

TEST(VerifyReduction, PinnedCases) {
  const Cnf contradiction = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  const auto [program_u, target_u] = build_reduction(contradiction);
  EXPECT_TRUE(is_elementary_bruteforce(program_u, target_u));
  EXPECT_FALSE(brute_force_sat(contradiction));
  EXPECT_TRUE(verify_reduction(contradiction));

  const Cnf satisfiable = parse_dimacs("p cnf 1 1\n1 0\n");
  const auto [program_s, target_s] = build_reduction(satisfiable);
  EXPECT_FALSE(is_elementary_bruteforce(program_s, target_s));
  EXPECT_TRUE(brute_force_sat(satisfiable));
  EXPECT_TRUE(verify_reduction(satisfiable));

  Cnf wide;
  wide.var_count = 7;
  EXPECT_THROW(verify_reduction(wide), TooLarge);
}

TEST(VerifyReduction, RandomInstances) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Cnf cnf = random_cnf(rng, 3 + static_cast<int>(rng() % 2), 8);
    EXPECT_TRUE(verify_reduction(cnf));
  }
}

namespace {

bool contains_positive(const AtomSet& z, int var) {
  return z.contains(Atom::make("x" + std::to_string(var)));
}
bool contains_negative(const AtomSet& z, int var) {
  return z.contains(Atom::make("xbar" + std::to_string(var)));
}
bool contains_literal(const AtomSet& z, int lit) {
  return lit > 0 ? contains_positive(z, lit) : contains_negative(z, -lit);
}

}  // namespace

TEST(ReductionLemmas, ExhaustiveOnSmallInstances) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 3; ++n) {
    const Cnf with_clauses = random_cnf(rng, n, 4);
    const ReductionParts parts = build_reduction_parts(with_clauses);
    const AtomSet& y = parts.literal_atoms;

    detail::for_each_nonempty_subset(y, [&](const AtomSet& z) {
      // a subset missing both literals of some variable is outbound for the
      // cover part
      bool misses_some_variable = false;
      for (int v = 1; v <= n; ++v) {
        if (!contains_positive(z, v) && !contains_negative(z, v)) misses_some_variable = true;
      }
      if (misses_some_variable) {
        EXPECT_TRUE(is_outbound(parts.variable_cover, z, y)) << render_atomset(z);
      }

      if (z.size() < y.size()) {
        // a proper subset with a complementary pair is outbound for the
        // choice part
        bool has_pair = false;
        for (int v = 1; v <= n; ++v) {
          if (contains_positive(z, v) && contains_negative(z, v)) has_pair = true;
        }
        if (has_pair) {
          EXPECT_TRUE(is_outbound(parts.literal_choice, z, y)) << render_atomset(z);
        }

        // a proper subset holding all complements of a clause but none of
        // its literals is outbound for that clause's part
        for (std::size_t c = 0; c < with_clauses.clauses.size(); ++c) {
          const auto& clause = with_clauses.clauses[c];
          bool all_complements = true;
          bool any_literal = false;
          for (int lit : clause) {
            all_complements = all_complements && contains_literal(z, -lit);
            any_literal = any_literal || contains_literal(z, lit);
          }
          if (all_complements && !any_literal) {
            EXPECT_TRUE(is_outbound(parts.clause_guards[c], z, y)) << render_atomset(z);
          }
        }
      }
      return true;
    });
  }
}

TEST(ReductionCertificates, NonElementaryTargetsYieldRuleByRuleWitnesses) {
  std::mt19937_64 rng(19);
  int witnessed = 0;
  for (int trial = 0; trial < 40 && witnessed < 10; ++trial) {
    const Cnf cnf = random_cnf(rng, 3, 6);
    const auto [program, target] = build_reduction(cnf);
    const std::optional<AtomSet> certificate = find_non_outbound_subset(program, target);
    EXPECT_EQ(certificate.has_value(), brute_force_sat(cnf));
    if (!certificate) continue;
    ++witnessed;
    // re-verify the certificate rule by rule: each rule misses at least one
    // outbound condition
    const AtomSet rest = set_difference(target, *certificate);
    for (const Rule& rule : program.rules()) {
      const bool outbound_via_rule =
          rule.head.intersects(*certificate) && rule.pos_body.intersects(rest) &&
          !rule.head.intersects(rest) && !rule.pos_body.intersects(*certificate);
      EXPECT_FALSE(outbound_via_rule) << render_rule(rule);
    }
  }
  EXPECT_GE(witnessed, 10);
}
