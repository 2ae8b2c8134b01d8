#include "covers/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "covers/errors.hpp"

namespace covers {

bool Graph::has_edge(int a, int b) const {
  auto e = std::make_pair(std::min(a, b), std::max(a, b));
  return std::binary_search(edges.begin(), edges.end(), e);
}

void Graph::add_edge(int a, int b) {
  if (a == b) return;
  auto e = std::make_pair(std::min(a, b), std::max(a, b));
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) edges.insert(it, e);
}

int Graph::num_components() const {
  std::map<int, int> parent;
  for (int v : vertices) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::set<int> roots;
  for (int v : vertices) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

int Graph::first_betti() const {
  return num_edges() - num_vertices() + num_components();
}

std::string Graph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v : vertices) os << "  v" << v << ";\n";
  for (auto [a, b] : edges) {
    os << "  v" << a << " -- v" << b;
    auto it = weights.find({a, b});
    if (it != weights.end()) os << " [label=\"" << it->second << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Graph defining_graph(const CombinatorialPolyhedron& poly,
                     const std::set<int>& mirror_faces) {
  Graph g;
  g.vertices.assign(mirror_faces.begin(), mirror_faces.end());
  for (int e = 0; e < poly.num_edges(); ++e) {
    auto f = poly.faces_of_edge(e);
    if (f[0] >= 0 && f[1] >= 0 && mirror_faces.count(f[0]) &&
        mirror_faces.count(f[1]))
      g.add_edge(f[0], f[1]);
  }
  return g;
}

Graph coxeter_graph(const Graph& g) {
  Graph out;
  out.vertices = g.vertices;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      int a = g.vertices[i], b = g.vertices[j];
      auto e = std::make_pair(std::min(a, b), std::max(a, b));
      if (g.has_edge(a, b)) {
        auto it = g.weights.find(e);
        int w = (it == g.weights.end()) ? 2 : it->second;
        if (w > 2) {
          out.add_edge(a, b);
          out.weights[e] = w;
        }
      } else {
        out.add_edge(a, b);  // weight infinity, kept out of the map
      }
    }
  return out;
}

Graph cycle_graph(int n) {
  Graph g;
  g.vertices.resize(n);
  std::iota(g.vertices.begin(), g.vertices.end(), 0);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace covers
