#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "elset/loops.hpp"

namespace elset {

namespace stats {
// Instrumentation: bumped on every brute-force elementariness decision, so
// tests can assert that polynomial paths never fall back to enumeration.
inline std::atomic<std::uint64_t> bruteforce_elementary_calls{0};
}  // namespace stats

// Z is outbound in Y if some rule has head meeting Z, positive body meeting
// Y\Z, head missing Y\Z, and positive body missing Z. For singleton heads
// the third condition is vacuous, which is exactly the nondisjunctive form.
inline bool is_outbound(const Program& program, const AtomSet& subset, const AtomSet& whole) {
  if (subset.empty()) throw EmptySubset("outbound test needs a nonempty subset");
  if (!subset.subset_of(whole)) throw NotSubset("subset is not contained in the whole set");
  const AtomSet rest = set_difference(whole, subset);
  for (const Rule& r : program.rules()) {
    if (r.head.intersects(subset) && r.pos_body.intersects(rest) && !r.head.intersects(rest) &&
        !r.pos_body.intersects(subset)) {
      return true;
    }
  }
  return false;
}

// First (smallest, then lexicographic) nonempty proper subset of `candidate`
// that is not outbound — a certificate of non-elementariness.
inline std::optional<AtomSet> find_non_outbound_subset(const Program& program,
                                                       const AtomSet& candidate) {
  detail::require_candidate(program, candidate);
  std::optional<AtomSet> witness;
  detail::for_each_nonempty_proper_subset(candidate, [&](const AtomSet& z) {
    if (!is_outbound(program, z, candidate)) {
      witness = z;
      return false;
    }
    return true;
  });
  return witness;
}

// Definition-level decider: Y is elementary iff all nonempty proper subsets
// are outbound in Y. Exponential; this is the reference oracle.
inline bool is_elementary_bruteforce(const Program& program, const AtomSet& candidate) {
  stats::bruteforce_elementary_calls.fetch_add(1, std::memory_order_relaxed);
  return !find_non_outbound_subset(program, candidate).has_value();
}

// Equivalent decider that quantifies only over proper subsets that are loops.
inline bool is_elementary_loops_only(const Program& program, const AtomSet& candidate) {
  detail::require_candidate(program, candidate);
  const Digraph graph = dependency_graph(program);
  return detail::for_each_nonempty_proper_subset(candidate, [&](const AtomSet& z) {
    if (!is_strongly_connected(induced_subgraph(graph, z))) return true;  // not a loop: skip
    return is_outbound(program, z, candidate);
  });
}

// No rule may have two head atoms in one loop. Loops live inside SCCs and
// every SCC is a loop, so checking SCCs of the dependency graph suffices.
inline bool is_head_cycle_free(const Program& program) {
  const std::vector<AtomSet> components = sccs(dependency_graph(program));
  for (const Rule& r : program.rules()) {
    if (r.head.size() < 2) continue;
    for (const AtomSet& component : components) {
      if (set_intersection(r.head, component).size() > 1) return false;
    }
  }
  return true;
}

namespace detail {

inline void require_nondisjunctive_or_hcf(const Program& program) {
  if (classify(program) == Mode::Disjunctive && !is_head_cycle_free(program)) {
    throw NotHeadCycleFree(
        "elementary subgraphs are only defined for nondisjunctive or head-cycle-free programs");
  }
}

}  // namespace detail

// Bottom-up construction of the elementary subgraph (Y, EC(Y)).
struct ElementarySubgraphTrace {
  AtomSet target;
  std::vector<std::vector<Edge>> levels;  // strictly increasing, first level empty
  Digraph final;
};

// Fixpoint of
//   EC^0 = {},
//   EC^{i+1} = EC^i + {(h, b) | some rule with h in head∩Y, b in B∩Y, and
//                     all of B∩Y inside one SCC of (Y, EC^i)}.
// "All of B∩Y in a strongly connected subgraph" is equivalent to "all of
// B∩Y in one SCC". Edges stay within Y; heads outside Y contribute nothing.
inline ElementarySubgraphTrace elementary_subgraph(const Program& program,
                                                   const AtomSet& candidate) {
  detail::require_candidate(program, candidate);
  detail::require_nondisjunctive_or_hcf(program);

  struct RelevantRule {
    AtomSet heads_in;  // head ∩ Y
    AtomSet body_in;   // B ∩ Y
  };
  std::vector<RelevantRule> relevant;
  for (const Rule& r : program.rules()) {
    AtomSet heads_in = set_intersection(r.head, candidate);
    if (heads_in.empty()) continue;
    relevant.push_back({std::move(heads_in), set_intersection(r.pos_body, candidate)});
  }

  ElementarySubgraphTrace trace;
  trace.target = candidate;
  std::vector<Edge> edges;
  trace.levels.push_back(edges);
  while (true) {
    // component id per vertex of (Y, EC^i)
    const Digraph current(candidate, edges);
    int count = 0;
    const std::vector<int> ids = detail::tarjan_component_ids(current, count);

    std::set<Edge> next(edges.begin(), edges.end());
    for (const RelevantRule& r : relevant) {
      bool one_component = true;
      int seen = -1;
      for (Atom b : r.body_in) {
        const int id = ids[detail::vertex_index(candidate, b)];
        if (seen == -1) {
          seen = id;
        } else if (id != seen) {
          one_component = false;
          break;
        }
      }
      if (!one_component) continue;
      for (Atom h : r.heads_in) {
        for (Atom b : r.body_in) next.insert({h, b});
      }
    }
    if (next.size() == edges.size()) break;
    edges.assign(next.begin(), next.end());
    trace.levels.push_back(edges);
  }
  trace.final = Digraph(candidate, std::move(edges));
  return trace;
}

// Polynomial decider: Y is elementary iff its elementary subgraph is
// strongly connected (nondisjunctive or head-cycle-free programs).
inline bool is_elementary_fast(const Program& program, const AtomSet& candidate) {
  return is_strongly_connected(elementary_subgraph(program, candidate).final);
}

// All elementary sets in canonical order. Every elementary set is a loop and
// hence lies inside one SCC, so only subsets of SCCs are swept. Uses the
// polynomial decider where it applies, brute force otherwise.
inline std::vector<AtomSet> enumerate_elementary_sets(const Program& program, std::size_t cap) {
  const bool fast = classify(program) == Mode::Nondisjunctive || is_head_cycle_free(program);
  std::set<AtomSet, CanonicalSetOrder> found;
  for (const AtomSet& component : sccs(dependency_graph(program))) {
    if (component.size() > 24) {
      throw CapExceeded("component too large for elementary-set enumeration");
    }
    detail::for_each_nonempty_subset(component, [&](const AtomSet& y) {
      const bool elementary =
          fast ? is_elementary_fast(program, y) : is_elementary_bruteforce(program, y);
      if (elementary) {
        found.insert(y);
        if (found.size() > cap) throw CapExceeded("elementary-set count exceeds cap");
      }
      return true;
    });
  }
  return {found.begin(), found.end()};
}

namespace detail {

inline bool is_nontrivial_loop(const Digraph& graph, const AtomSet& candidate) {
  if (!is_strongly_connected(induced_subgraph(graph, candidate))) return false;
  if (candidate.size() > 1) return true;
  const Atom a = *candidate.begin();
  return graph.has_edge(a, a);
}

}  // namespace detail

// Original Gebser-Schaub notion, for comparison. For a non-trivial loop L,
// with R-(L) = {rules: head in L, B∩L = {}} and R+(L) = {rules: head in L,
// B∩L != {}}, L qualifies iff R-(L') meets R+(L) for every non-trivial
// proper subloop L'.
inline bool is_gs_elementary_loop(const Program& program, const AtomSet& loop) {
  if (classify(program) != Mode::Nondisjunctive) {
    throw NotNondisjunctive("GS-elementary loops are defined for nondisjunctive programs");
  }
  detail::require_candidate(program, loop);
  const Digraph graph = dependency_graph(program);
  if (!detail::is_nontrivial_loop(graph, loop)) {
    throw NotNontrivialLoop("candidate is not a non-trivial loop");
  }

  std::vector<std::size_t> r_plus;  // rule indices with head in L and B∩L != {}
  for (std::size_t i = 0; i < program.rules().size(); ++i) {
    const Rule& r = program.rules()[i];
    if (r.head.intersects(loop) && r.pos_body.intersects(loop)) r_plus.push_back(i);
  }

  return detail::for_each_nonempty_proper_subset(loop, [&](const AtomSet& sub) {
    if (!detail::is_nontrivial_loop(graph, sub)) return true;
    for (std::size_t i : r_plus) {
      const Rule& r = program.rules()[i];
      if (r.head.intersects(sub) && !r.pos_body.intersects(sub)) return true;  // in R-(L')
    }
    return false;  // some subloop with empty intersection: not GS-elementary
  });
}

}  // namespace elset
