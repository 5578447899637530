#pragma once

#include <string_view>

#include "elset/elset.hpp"

// Shared desk fixtures. Each is small enough for exhaustive sweeps.
namespace fixtures {

// Two atoms feeding a joint atom that feeds both back; p also has an
// external rule. Seven loops, of which only {p,q,r} is not elementary.
inline elset::Program split_feedback() {
  return elset::parse_program("p :- not s. p :- r. q :- r. r :- p, q.",
                              elset::Mode::Nondisjunctive);
}

// A fact plus two mutually supporting rules blocked by their own head.
// {p,q} is the only maximal elementary set, yet {p,q} is not stable.
inline elset::Program self_blocking() {
  return elset::parse_program("p :- q, not p. q :- p, not p. p.", elset::Mode::Nondisjunctive);
}

// Mutual positive support guarded by "not r": {p,q} is elementary and
// unfounded w.r.t. {p,q,r} but not elementarily unfounded.
inline elset::Program mutual_support() {
  return elset::parse_program("p :- q, not r. q :- p, not r.", elset::Mode::Nondisjunctive);
}

// Joint self-support plus a relay atom: {p,q,r} is elementary although its
// subset loop {p,q} is not.
inline elset::Program interlocked_cycle() {
  return elset::parse_program("p :- p, q. p :- r. r :- p. q :- p, q. q :- r. r :- q.",
                              elset::Mode::Nondisjunctive);
}

// Disjunctive rule whose head atoms share a loop; not head-cycle-free, and
// {p,q} is a loop but not elementary.
inline elset::Program head_cycle_pair() {
  return elset::parse_program("p ; q :- p. p :- q. p :- not r.", elset::Mode::Disjunctive);
}

// Symmetric disjunctive triangle: every singleton is unfounded w.r.t.
// {p,q,r} and {p,q,r} itself is unfounded but not elementary.
inline elset::Program disjunctive_triangle() {
  return elset::parse_program("p ; q :- r. p ; r :- q. q ; r :- p.", elset::Mode::Disjunctive);
}

inline elset::AtomSet set(std::string_view text) { return elset::parse_atomset(text); }

}  // namespace fixtures
