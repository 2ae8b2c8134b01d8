#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "covers/polyhedron.hpp"

namespace covers {

/// Finite simplicial graph (no loops, no multi-edges) with an optional
/// integer weight per edge; absent weight on a Coxeter-graph edge means
/// infinity.
struct Graph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // (a < b), sorted
  std::map<std::pair<int, int>, int> weights;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  bool has_edge(int a, int b) const;
  void add_edge(int a, int b);
  /// First Betti number E - V + #components.
  int first_betti() const;
  int num_components() const;
  std::string to_dot(const std::string& name = "G") const;
};

/// One vertex per mirror face, one edge per polyhedron edge shared by two
/// mirror faces (the commutation graph of the reflection group).
Graph defining_graph(const CombinatorialPolyhedron& poly,
                     const std::set<int>& mirror_faces);

/// The weighted companion of a right-angled defining graph: edge set
/// {e | w(e) > 2} plus all non-edges, the latter carrying weight infinity
/// (left absent from the weight map).
Graph coxeter_graph(const Graph& g);

/// The n-cycle on vertices 0..n-1.
Graph cycle_graph(int n);

}  // namespace covers
