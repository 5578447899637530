#pragma once

#include <cstddef>
#include <deque>
#include <set>
#include <vector>

#include "elset/digraph.hpp"
#include "elset/program.hpp"

namespace elset {

// Positive dependency graph: vertices are the atoms occurring in the
// program, edges run from every head atom to every positive-body atom of
// each rule. Negated body parts contribute nothing.
inline Digraph dependency_graph(const Program& program) {
  std::vector<Edge> edges;
  for (const Rule& r : program.rules()) {
    for (Atom h : r.head) {
      for (Atom b : r.pos_body) edges.emplace_back(h, b);
    }
  }
  return Digraph(atoms_of(program), std::move(edges));
}

namespace detail {

inline void require_candidate(const Program& program, const AtomSet& candidate) {
  if (candidate.empty()) throw EmptyCandidate("candidate set is empty");
  if (!candidate.subset_of(atoms_of(program))) {
    throw UnknownAtom("candidate contains atoms not occurring in the program");
  }
}

}  // namespace detail

// A nonempty set L is a loop iff the subgraph of the dependency graph
// induced by L is strongly connected. Singletons always qualify.
inline bool is_loop(const Program& program, const AtomSet& candidate) {
  detail::require_candidate(program, candidate);
  return is_strongly_connected(induced_subgraph(dependency_graph(program), candidate));
}

// Graph-free characterization: L is a loop iff every nonempty proper subset
// Z of L has a rule whose head meets Z and whose positive body meets L\Z.
inline bool is_loop_alt(const Program& program, const AtomSet& candidate) {
  detail::require_candidate(program, candidate);
  return detail::for_each_nonempty_proper_subset(candidate, [&](const AtomSet& z) {
    const AtomSet rest = set_difference(candidate, z);
    for (const Rule& r : program.rules()) {
      if (r.head.intersects(z) && r.pos_body.intersects(rest)) return true;  // keep going
    }
    return false;  // subset with no such rule: stop, not a loop
  });
}

// All loops, in canonical order (size, then lexicographic). Throws
// CapExceeded as soon as more than `cap` loops exist.
//
// Every loop lies inside one SCC of the graph induced by any superset, so
// recursively decomposing vertex-deleted SCCs reaches all of them.
inline std::vector<AtomSet> enumerate_loops(const Program& program, std::size_t cap) {
  const Digraph graph = dependency_graph(program);
  std::set<AtomSet, CanonicalSetOrder> loops;
  std::set<AtomSet, CanonicalSetOrder> scheduled;
  std::deque<AtomSet> queue;
  if (!graph.vertices().empty()) {
    queue.push_back(graph.vertices());
    scheduled.insert(graph.vertices());
  }
  while (!queue.empty()) {
    const AtomSet current = std::move(queue.front());
    queue.pop_front();
    for (const AtomSet& component : sccs(induced_subgraph(graph, current))) {
      if (!loops.insert(component).second) continue;
      if (loops.size() > cap) {
        throw CapExceeded("loop count exceeds cap");
      }
      if (component.size() > 1) {
        for (Atom v : component) {
          AtomSet smaller = without_atom(component, v);
          if (scheduled.insert(smaller).second) queue.push_back(std::move(smaller));
        }
      }
    }
  }
  return {loops.begin(), loops.end()};
}

// Trivial loop: a singleton whose atom has no self-edge.
inline bool is_trivial_loop(const Program& program, const AtomSet& candidate) {
  if (!is_loop(program, candidate)) throw NotALoop("candidate is not a loop");
  if (candidate.size() != 1) return false;
  const Atom a = *candidate.begin();
  return !dependency_graph(program).has_edge(a, a);
}

}  // namespace elset
