#include <gtest/gtest.h>

#include <vector>

#include "fixtures.hpp"

using namespace elset;

namespace {

Formula atom(const char* name) { return Formula::atom(Atom::make(name)); }

std::vector<Program> random_family(std::uint64_t first_seed, int count, GenParams::Mode mode,
                                   bool double_negation = false) {
  std::vector<Program> out;
  for (int i = 0; i < count; ++i) {
    GenParams params;
    params.seed = first_seed + static_cast<std::uint64_t>(i);
    params.mode = mode;
    params.allow_double_negation = double_negation;
    out.push_back(gen_random_program(params));
  }
  return out;
}

// Independent route: satisfaction via the formula reading of each rule.
bool satisfies_via_formulas(const Program& program, const AtomSet& x) {
  for (const Rule& r : program.rules()) {
    std::vector<Formula> body;
    for (Atom a : r.pos_body) body.push_back(Formula::atom(a));
    for (Atom a : r.neg_body) body.push_back(Formula::negation(Formula::atom(a)));
    for (Atom a : r.nneg_body) {
      body.push_back(Formula::negation(Formula::negation(Formula::atom(a))));
    }
    std::vector<Formula> head;
    for (Atom a : r.head) head.push_back(Formula::atom(a));
    const Formula rule_formula = Formula::implication(Formula::conjunction(std::move(body)),
                                                      Formula::disjunction(std::move(head)));
    if (!eval(rule_formula, x)) return false;
  }
  return true;
}

}  // namespace

TEST(Satisfaction, Pinned) {
  const Program pi = fixtures::split_feedback();
  EXPECT_TRUE(satisfies_program(pi, fixtures::set("p")));
  EXPECT_FALSE(satisfies_program(pi, fixtures::set("q")));
  EXPECT_THROW(satisfies_program(pi, fixtures::set("z")), UnknownAtom);
}

TEST(Satisfaction, MatchesFormulaReading) {
  std::vector<Program> programs = random_family(1000, 30, GenParams::Mode::Disjunctive, true);
  for (auto& p : random_family(1040, 30, GenParams::Mode::Nondisjunctive)) {
    programs.push_back(std::move(p));
  }
  for (const Program& program : programs) {
    detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
      EXPECT_EQ(satisfies_program(program, x), satisfies_via_formulas(program, x))
          << render_program(program) << " under " << render_atomset(x);
      return true;
    });
  }
}

TEST(ExternalSupport, PinnedStructure) {
  const Program pi = fixtures::split_feedback();
  EXPECT_EQ(external_support_formula(pi, fixtures::set("p,r")), Formula::negation(atom("s")));
  EXPECT_EQ(external_support_formula(pi, fixtures::set("q,r")), Formula::falsity());
  EXPECT_EQ(external_support_formula(pi, fixtures::set("r")),
            Formula::conjunction({atom("p"), atom("q")}));
  // disjuncts in program order
  EXPECT_EQ(external_support_formula(pi, fixtures::set("p")),
            Formula::disjunction({Formula::negation(atom("s")), atom("r")}));
  EXPECT_THROW(external_support_formula(pi, {}), EmptyTarget);
}

TEST(ExternalSupport, DisjunctiveAddsNegatedExtraHeads) {
  const Formula es =
      external_support_formula(fixtures::disjunctive_triangle(), fixtures::set("p"));
  const Formula expected = Formula::disjunction(
      {Formula::conjunction({atom("r"), Formula::negation(atom("q"))}),
       Formula::conjunction({atom("q"), Formula::negation(atom("r"))})});
  EXPECT_EQ(es, expected);
  EXPECT_EQ(render_formula(es), "r & -q | q & -r");
}

TEST(LoopFormula, PinnedRenders) {
  const Program pi = fixtures::split_feedback();
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("p"))), "p -> -s | r");
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("q"))), "q -> r");
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("r"))), "r -> p & q");
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("s"))), "s -> false");
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("p,r"))), "p & r -> -s");
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("q,r"))), "q & r -> false");
  EXPECT_EQ(render_formula(loop_formula(pi, fixtures::set("p,q,r"))), "p & q & r -> -s");
}

TEST(Unfounded, Pinned) {
  EXPECT_TRUE(is_unfounded(fixtures::split_feedback(), fixtures::set("q,r"),
                           fixtures::set("p,q,r")));
  EXPECT_FALSE(is_unfounded(fixtures::split_feedback(), fixtures::set("p,q,r"),
                            fixtures::set("p,q,r")));
  EXPECT_TRUE(is_unfounded(fixtures::mutual_support(), fixtures::set("p,q"),
                           fixtures::set("p,q,r")));
  EXPECT_TRUE(is_unfounded(fixtures::disjunctive_triangle(), fixtures::set("p,q,r"),
                           fixtures::set("p,q,r")));
}

TEST(RelevantProgram, Pinned) {
  EXPECT_EQ(relevant_program(fixtures::split_feedback(), fixtures::set("p,q,r")),
            fixtures::split_feedback());
  EXPECT_TRUE(
      relevant_program(fixtures::mutual_support(), fixtures::set("p,q,r")).rules().empty());
  EXPECT_EQ(relevant_program(fixtures::self_blocking(), fixtures::set("p,q")),
            parse_program("p.", Mode::Nondisjunctive));
  EXPECT_THROW(relevant_program(fixtures::disjunctive_triangle(), fixtures::set("p")),
               NotNondisjunctive);
}

TEST(RelevantProgramDisj, Pinned) {
  const Program six = fixtures::disjunctive_triangle();
  const AtomSet x = fixtures::set("p,q,r");
  EXPECT_EQ(relevant_program_disj(six, x, fixtures::set("p,q,r")), six);
  EXPECT_TRUE(relevant_program_disj(six, x, fixtures::set("p")).rules().empty());

  // when Y covers all supported heads of a nondisjunctive program, the two
  // relevant programs coincide
  const Program pi = fixtures::split_feedback();
  EXPECT_EQ(relevant_program_disj(pi, x, fixtures::set("p,q,r")).rules(),
            relevant_program(pi, x).rules());
}

TEST(ElementarilyUnfounded, Pinned) {
  EXPECT_FALSE(is_elementarily_unfounded(fixtures::mutual_support(), fixtures::set("p,q"),
                                         fixtures::set("p,q,r")));
  EXPECT_TRUE(is_elementarily_unfounded(fixtures::mutual_support(), fixtures::set("r"),
                                        fixtures::set("p,q,r")));
  EXPECT_TRUE(is_elementarily_unfounded(fixtures::split_feedback(), fixtures::set("q,r"),
                                        fixtures::set("p,q,r")));
  EXPECT_THROW(
      is_elementarily_unfounded(fixtures::split_feedback(), {}, fixtures::set("p")),
      EmptyTarget);
  EXPECT_THROW(is_elementarily_unfounded(fixtures::split_feedback(), fixtures::set("z"),
                                         fixtures::set("p")),
               UnknownAtom);
}

TEST(ElementarilyUnfounded, EnumerationPinned) {
  const std::vector<AtomSet> a =
      enumerate_elementarily_unfounded(fixtures::split_feedback(), fixtures::set("p,q,r"));
  const std::vector<AtomSet> expected_a = {fixtures::set("s"), fixtures::set("q,r")};
  EXPECT_EQ(a, expected_a);

  const std::vector<AtomSet> b =
      enumerate_elementarily_unfounded(fixtures::split_feedback(), fixtures::set("p"));
  const std::vector<AtomSet> expected_b = {fixtures::set("q"), fixtures::set("r"),
                                           fixtures::set("s")};
  EXPECT_EQ(b, expected_b);

  const std::vector<AtomSet> c =
      enumerate_elementarily_unfounded(fixtures::mutual_support(), fixtures::set("p,q,r"));
  const std::vector<AtomSet> expected_c = {fixtures::set("p"), fixtures::set("q"),
                                           fixtures::set("r")};
  EXPECT_EQ(c, expected_c);
}

TEST(Reduct, Pinned) {
  EXPECT_EQ(reduct(fixtures::self_blocking(), fixtures::set("p")),
            parse_program("p.", Mode::Nondisjunctive));

  const Program positive = fixtures::interlocked_cycle();
  EXPECT_EQ(reduct(positive, fixtures::set("p,q")), positive);

  EXPECT_EQ(reduct(fixtures::split_feedback(), fixtures::set("p,q,r")),
            parse_program("p. p :- r. q :- r. r :- p, q.", Mode::Nondisjunctive));

  // double negation: "not not a" survives the reduct only when a is in X
  const Program dn = parse_program("p :- not not q. q.", Mode::Disjunctive);
  EXPECT_EQ(reduct(dn, fixtures::set("p,q")), parse_program("p. q.", Mode::Disjunctive));
  EXPECT_EQ(reduct(dn, fixtures::set("")), parse_program("q.", Mode::Disjunctive));
}

TEST(Stability, Pinned) {
  EXPECT_TRUE(is_stable(fixtures::split_feedback(), fixtures::set("p")));
  EXPECT_FALSE(is_stable(fixtures::self_blocking(), fixtures::set("p,q")));
  EXPECT_FALSE(is_stable(fixtures::split_feedback(), fixtures::set("p,q,r")));
}

TEST(Stability, NondisjunctivePathMatchesMinimalModelPath) {
  for (const Program& program : random_family(1100, 40, GenParams::Mode::Nondisjunctive)) {
    detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
      // generic route: model of the program and no smaller model of the reduct
      bool generic = satisfies_program(program, x);
      if (generic) {
        const Program red = reduct(program, x);
        detail::for_each_subset(x, [&](const AtomSet& smaller) {
          bool smaller_is_model = true;
          for (const Rule& r : red.rules()) {
            if (r.pos_body.subset_of(smaller) && !r.head.intersects(smaller)) {
              smaller_is_model = false;
              break;
            }
          }
          if (smaller.size() < x.size() && smaller_is_model) {
            generic = false;
            return false;
          }
          return true;
        });
      }
      EXPECT_EQ(is_stable(program, x), generic)
          << render_program(program) << " under " << render_atomset(x);
      return true;
    });
  }
}

TEST(ModelEnumeration, Pinned) {
  const std::vector<AtomSet> models = enumerate_models(fixtures::split_feedback());
  const std::vector<AtomSet> expected = {fixtures::set("p"),     fixtures::set("s"),
                                         fixtures::set("p,s"),   fixtures::set("q,s"),
                                         fixtures::set("p,q,r"), fixtures::set("p,q,r,s")};
  EXPECT_EQ(models, expected);

  const std::vector<AtomSet> stable = enumerate_stable_models(fixtures::split_feedback());
  const std::vector<AtomSet> expected_stable = {fixtures::set("p")};
  EXPECT_EQ(stable, expected_stable);

  const Program empty = make_program({}, Mode::Nondisjunctive);
  EXPECT_EQ(enumerate_models(empty), std::vector<AtomSet>{AtomSet{}});
  EXPECT_EQ(enumerate_stable_models(empty), std::vector<AtomSet>{AtomSet{}});
}

TEST(ModelEnumeration, BoundIsEnforced) {
  std::vector<Rule> rules;
  for (char c = 'a'; c <= 'q'; ++c) {  // 17 atoms
    rules.push_back(make_rule(AtomSet{Atom::make(std::string(1, c))}));
  }
  const Program wide = make_program(std::move(rules), Mode::Nondisjunctive);
  EXPECT_THROW(enumerate_models(wide), UniverseTooLarge);
  EXPECT_THROW(enumerate_stable_models(wide), UniverseTooLarge);
  EXPECT_THROW(enumerate_models(fixtures::split_feedback(), 3), UniverseTooLarge);
}

TEST(DisjunctiveStability, MinimalModelSemantics) {
  // p ; q. has the two stable models {p} and {q}, but not {p,q}
  const Program choice = parse_program("p ; q.", Mode::Disjunctive);
  const std::vector<AtomSet> expected = {fixtures::set("p"), fixtures::set("q")};
  EXPECT_EQ(enumerate_stable_models(choice), expected);

  const std::vector<AtomSet> triangle_stable =
      enumerate_stable_models(fixtures::disjunctive_triangle());
  EXPECT_EQ(triangle_stable, std::vector<AtomSet>{AtomSet{}});
}

TEST(CheckConditions, UnstableModelFailsEverywhere) {
  const ConditionReport report =
      check_conditions(fixtures::split_feedback(), fixtures::set("p,q,r"));
  EXPECT_TRUE(report.is_model);
  EXPECT_FALSE(report.cond_a);
  EXPECT_FALSE(report.cond_b);
  EXPECT_FALSE(report.cond_b_prime);
  EXPECT_FALSE(report.cond_c);
  EXPECT_FALSE(report.cond_d);
  EXPECT_FALSE(report.cond_e);
  EXPECT_FALSE(report.cond_e_prime);
  EXPECT_TRUE(report.all_equal());
  ASSERT_TRUE(report.witness_c.has_value());
  EXPECT_EQ(*report.witness_c, fixtures::set("q,r"));
}

TEST(CheckConditions, StableModelPassesEverywhere) {
  const ConditionReport report = check_conditions(fixtures::split_feedback(), fixtures::set("p"));
  EXPECT_TRUE(report.is_model);
  EXPECT_TRUE(report.cond_a && report.cond_b && report.cond_b_prime && report.cond_c &&
              report.cond_d && report.cond_e && report.cond_e_prime);
  EXPECT_FALSE(report.witness_b.has_value());
}

TEST(CheckConditions, Errors) {
  EXPECT_THROW(check_conditions(fixtures::split_feedback(), fixtures::set("z")), UnknownAtom);
  EXPECT_THROW(check_conditions(fixtures::split_feedback(), fixtures::set("p"), 3),
               UniverseTooLarge);
}

TEST(CheckConditions, WeakenedMaximalElementaryVariantIsNotEquivalent) {
  // the weakened check accepts a non-stable model
  const Program three = fixtures::self_blocking();
  EXPECT_TRUE(satisfies_program(three, fixtures::set("p,q")));
  EXPECT_TRUE(satisfies_maximal_elementary_formulas(three, fixtures::set("p,q")));
  EXPECT_FALSE(is_stable(three, fixtures::set("p,q")));
  // while the real ladder rejects it
  EXPECT_FALSE(check_conditions(three, fixtures::set("p,q")).cond_e);
  // and the stable model passes both
  EXPECT_TRUE(satisfies_maximal_elementary_formulas(three, fixtures::set("p")));
  EXPECT_TRUE(is_stable(three, fixtures::set("p")));
}

TEST(CheckConditions, LadderAgreesOnAllFixtureModels) {
  for (const auto& program :
       {fixtures::split_feedback(), fixtures::self_blocking(), fixtures::mutual_support(),
        fixtures::interlocked_cycle(), fixtures::head_cycle_pair(),
        fixtures::disjunctive_triangle()}) {
    for (const AtomSet& model : enumerate_models(program)) {
      const ConditionReport report = check_conditions(program, model);
      EXPECT_TRUE(report.all_equal()) << render_program(program) << render_atomset(model);
      EXPECT_EQ(report.cond_a, is_stable(program, model));
    }
  }
}

TEST(Properties, ElementaryEntailment) {
  // if X satisfies the loop formulas of all elementary subsets of Y, it
  // satisfies the loop formula of Y itself
  std::vector<Program> programs = random_family(1200, 15, GenParams::Mode::Nondisjunctive);
  for (auto& p : random_family(1220, 15, GenParams::Mode::Disjunctive)) {
    programs.push_back(std::move(p));
  }
  programs.push_back(fixtures::split_feedback());
  for (const Program& program : programs) {
    std::vector<AtomSet> subsets;
    std::vector<Formula> formulas;
    std::vector<bool> elementary;
    detail::for_each_nonempty_subset(atoms_of(program), [&](const AtomSet& z) {
      subsets.push_back(z);
      formulas.push_back(loop_formula(program, z));
      elementary.push_back(is_elementary_bruteforce(program, z));
      return true;
    });
    detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
      std::vector<bool> holds(subsets.size());
      for (std::size_t i = 0; i < subsets.size(); ++i) holds[i] = eval(formulas[i], x);
      for (std::size_t y = 0; y < subsets.size(); ++y) {
        bool all_elementary_subsets_hold = true;
        for (std::size_t z = 0; z < subsets.size(); ++z) {
          if (elementary[z] && subsets[z].subset_of(subsets[y]) && !holds[z]) {
            all_elementary_subsets_hold = false;
            break;
          }
        }
        if (all_elementary_subsets_hold) {
          EXPECT_TRUE(holds[y]) << render_program(program) << " X=" << render_atomset(x)
                                << " Y=" << render_atomset(subsets[y]);
        }
      }
      return true;
    });
  }
}

TEST(Properties, RelevantElementarySubsetsAreSupported) {
  // proper subsets of a set that is elementary for the relevant program are
  // externally supported w.r.t. X
  for (const Program& program : random_family(1300, 40, GenParams::Mode::Nondisjunctive)) {
    detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
      const Program relevant = relevant_program(program, x);
      detail::for_each_nonempty_subset(atoms_of(relevant), [&](const AtomSet& y) {
        if (!is_elementary_bruteforce(relevant, y)) return true;
        detail::for_each_nonempty_proper_subset(y, [&](const AtomSet& z) {
          EXPECT_TRUE(eval(external_support_formula(program, z), x))
              << render_program(program) << " X=" << render_atomset(x)
              << " Y=" << render_atomset(y) << " Z=" << render_atomset(z);
          return true;
        });
        return true;
      });
      return true;
    });
  }
}

TEST(Properties, ElementarilyUnfoundedAntichain) {
  std::vector<Program> programs = random_family(1400, 20, GenParams::Mode::Nondisjunctive);
  for (auto& p : random_family(1420, 20, GenParams::Mode::Disjunctive)) {
    programs.push_back(std::move(p));
  }
  for (const Program& program : programs) {
    detail::for_each_subset(atoms_of(program), [&](const AtomSet& x) {
      const std::vector<AtomSet> sets = enumerate_elementarily_unfounded(program, x);
      for (const AtomSet& a : sets) {
        for (const AtomSet& b : sets) {
          EXPECT_FALSE(a.proper_subset_of(b))
              << render_program(program) << " X=" << render_atomset(x);
        }
      }
      return true;
    });
  }
}

TEST(ConditionReport, Serialization) {
  const nlohmann::json j =
      to_json(check_conditions(fixtures::split_feedback(), fixtures::set("p,q,r")));
  EXPECT_EQ(j["model"], nlohmann::json({"p", "q", "r"}));
  EXPECT_TRUE(j["is_model"].get<bool>());
  EXPECT_FALSE(j["conditions"]["a"].get<bool>());
  EXPECT_FALSE(j["conditions"]["e_prime"].get<bool>());
  EXPECT_EQ(j["witnesses"]["c"], nlohmann::json({"q", "r"}));
}
