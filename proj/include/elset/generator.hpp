#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "elset/elementary.hpp"
#include "elset/program.hpp"

namespace elset {

// Parameters of the seeded random-program generator. Identical params and
// seed always produce the identical program.
struct GenParams {
  enum class Mode { Nondisjunctive, Disjunctive, HcfOnly };

  int atom_count = 6;   // at most 8
  int rule_count = 12;  // at most 16
  int max_head = 2;
  int max_pos_body = 3;
  int max_neg_body = 2;
  bool allow_double_negation = false;
  Mode mode = Mode::Nondisjunctive;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Own Fisher-Yates: std::shuffle's output is implementation-defined, and the
// generator promises bit-identical programs across platforms.
inline std::vector<Atom> sample_atoms(std::mt19937_64& rng, const std::vector<Atom>& pool,
                                      std::size_t count) {
  std::vector<Atom> deck = pool;
  for (std::size_t i = deck.size(); i > 1; --i) {
    std::swap(deck[i - 1], deck[draw(rng, i)]);
  }
  const std::size_t take = std::min(count, deck.size());
  return {deck.begin(), deck.begin() + static_cast<std::ptrdiff_t>(take)};
}

inline std::vector<Rule> gen_rules(std::mt19937_64& rng, const GenParams& params,
                                   const std::vector<Atom>& pool) {
  const bool nondisjunctive = params.mode == GenParams::Mode::Nondisjunctive;
  std::vector<Rule> rules;

  // Bias roughly half of the draws toward a cyclic positive dependency, so
  // loop-related properties see non-singleton SCCs.
  if (params.atom_count >= 2 && params.rule_count >= 2 && draw(rng, 2) == 0) {
    const std::size_t k =
        std::min<std::size_t>(2 + draw(rng, 2), std::min(pool.size(), std::size_t(params.rule_count)));
    const std::vector<Atom> cycle = sample_atoms(rng, pool, k);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      rules.push_back(make_rule(AtomSet{cycle[i]}, AtomSet{cycle[(i + 1) % cycle.size()]}));
    }
  }

  while (rules.size() < static_cast<std::size_t>(params.rule_count)) {
    std::size_t head_size = 1;
    if (!nondisjunctive) {
      head_size = draw(rng, 8) == 0 ? 0 : 1 + draw(rng, std::uint64_t(params.max_head));
    }
    AtomSet head(sample_atoms(rng, pool, head_size));
    AtomSet pos(sample_atoms(rng, pool, draw(rng, std::uint64_t(params.max_pos_body) + 1)));
    AtomSet neg(sample_atoms(rng, pool, draw(rng, std::uint64_t(params.max_neg_body) + 1)));
    AtomSet nneg;
    if (params.allow_double_negation && !nondisjunctive) {
      nneg = AtomSet(sample_atoms(rng, pool, draw(rng, std::uint64_t(params.max_neg_body) + 1)));
    }
    rules.push_back(make_rule(std::move(head), std::move(pos), std::move(neg), std::move(nneg)));
  }
  return rules;
}

}  // namespace detail

// Draws a random program within the bounds. In HcfOnly mode, rejected
// non-head-cycle-free draws are resampled (bounded number of attempts).
inline Program gen_random_program(const GenParams& params) {
  if (params.atom_count < 1 || params.atom_count > 8 || params.rule_count < 0 ||
      params.rule_count > 16 || params.max_head < 1 || params.max_pos_body < 0 ||
      params.max_neg_body < 0) {
    throw Error("generator parameters out of range");
  }
  std::vector<Atom> pool;
  for (int i = 0; i < params.atom_count; ++i) {
    pool.push_back(Atom::make(std::string(1, static_cast<char>('a' + i))));
  }
  const Mode program_mode = params.mode == GenParams::Mode::Nondisjunctive
                                ? Mode::Nondisjunctive
                                : Mode::Disjunctive;
  constexpr int kMaxAttempts = 512;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(params.seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(attempt));
    Program program = make_program(detail::gen_rules(rng, params, pool), program_mode);
    if (params.mode != GenParams::Mode::HcfOnly || is_head_cycle_free(program)) {
      return program;
    }
  }
  throw GenerationExhausted("no head-cycle-free program found within the resample budget");
}

}  // namespace elset
