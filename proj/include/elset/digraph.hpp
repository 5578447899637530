#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "elset/atoms.hpp"
#include "elset/errors.hpp"

namespace elset {

using Edge = std::pair<Atom, Atom>;

// Directed graph over atoms. Edges are kept sorted and duplicate-free;
// endpoints must be vertices.
class Digraph {
 public:
  Digraph() = default;

  Digraph(AtomSet vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      if (!vertices_.contains(e.first) || !vertices_.contains(e.second)) {
        throw UnknownAtom("edge endpoint is not a vertex: (" + e.first.name() + ", " +
                          e.second.name() + ")");
      }
    }
  }

  const AtomSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Atom from, Atom to) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Digraph& a, const Digraph& b) { return !(a == b); }

 private:
  AtomSet vertices_;
  std::vector<Edge> edges_;
};

inline Digraph induced_subgraph(const Digraph& graph, const AtomSet& vertices) {
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (vertices.contains(e.first) && vertices.contains(e.second)) edges.push_back(e);
  }
  return Digraph(vertices, std::move(edges));
}

namespace detail {

inline std::size_t vertex_index(const AtomSet& vertices, Atom a) {
  const auto& members = vertices.members();
  return static_cast<std::size_t>(
      std::lower_bound(members.begin(), members.end(), a) - members.begin());
}

// Single-pass iterative Tarjan. Returns the component id of every vertex;
// ids are assigned in completion order.
inline std::vector<int> tarjan_component_ids(const Digraph& graph, int& component_count) {
  const std::size_t n = graph.vertices().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : graph.edges()) {
    adj[vertex_index(graph.vertices(), e.first)].push_back(
        vertex_index(graph.vertices(), e.second));
  }

  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited);
  std::vector<int> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<int> component(n, kUnvisited);
  int next_index = 0;
  component_count = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next_child;
  };
  std::vector<Frame> call_stack;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const std::size_t v = frame.vertex;
      if (frame.next_child < adj[v].size()) {
        const std::size_t w = adj[v][frame.next_child++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          while (true) {
            const std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component[w] = component_count;
            if (w == v) break;
          }
          ++component_count;
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const std::size_t parent = call_stack.back().vertex;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }
  return component;
}

}  // namespace detail

// Partition of the vertices into strongly connected components; each
// component is canonically sorted and the list is ordered by smallest member.
inline std::vector<AtomSet> sccs(const Digraph& graph) {
  int count = 0;
  const std::vector<int> ids = detail::tarjan_component_ids(graph, count);
  std::vector<std::vector<Atom>> buckets(count);
  const auto& members = graph.vertices().members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    buckets[ids[i]].push_back(members[i]);
  }
  std::vector<AtomSet> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.emplace_back(std::move(bucket));
  std::sort(out.begin(), out.end(), [](const AtomSet& a, const AtomSet& b) {
    return a.members().front() < b.members().front();
  });
  return out;
}

// A graph with at most one vertex counts as strongly connected.
inline bool is_strongly_connected(const Digraph& graph) {
  if (graph.vertices().size() <= 1) return true;
  int count = 0;
  detail::tarjan_component_ids(graph, count);
  return count == 1;
}

}  // namespace elset
