#include <set>

#include "covers/presentation.hpp"
#include "covers/triangulation.hpp"
#include "doctest.h"

using namespace covers;

namespace {
std::set<int> all_faces(const CombinatorialPolyhedron& p) {
  std::set<int> s;
  for (int f = 0; f < p.num_faces(); ++f) s.insert(f);
  return s;
}
}  // namespace

TEST_CASE("defining graph of the tetrahedron is K4") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  Graph g = defining_graph(t, all_faces(t));
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 6);
}

TEST_CASE("defining graph of the cube is the octahedron skeleton") {
  auto c = CombinatorialPolyhedron::cube();
  Graph g = defining_graph(c, all_faces(c));
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 12);
  // Opposite faces (0,1), (2,4), (3,5) stay non-adjacent.
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(2, 4));
  CHECK_FALSE(g.has_edge(3, 5));
}

TEST_CASE("dome defining graph = cycle plus the triangulation chords") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& rep : rotation_class_representatives(n)) {
      Pyramitoid pyr = pyramitoid_from_triangulation(rep);
      std::set<int> dome(pyr.lateral_faces().begin(), pyr.lateral_faces().end());
      Graph g = defining_graph(pyr.polyhedron(), dome);
      CHECK(g.num_vertices() == n);
      CHECK(g.num_edges() == 2 * n - 3);
      // Non-cycle edges, read through face positions, are the code arcs.
      std::map<int, int> pos;
      for (int i = 0; i < n; ++i) pos[pyr.lateral_face(i)] = i;
      std::set<std::pair<int, int>> chords;
      for (auto [a, b] : g.edges) {
        int i = pos.at(a), j = pos.at(b);
        int d = (i - j + n) % n;
        if (d != 1 && d != n - 1)
          chords.insert({std::min(i, j), std::max(i, j)});
      }
      std::set<std::pair<int, int>> expect(rep.diagonals.begin(),
                                           rep.diagonals.end());
      CHECK(chords == expect);
    }
  }
}

TEST_CASE("coxeter graph is the complement in the right-angled case") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  Graph k4 = defining_graph(t, all_faces(t));
  CHECK(coxeter_graph(k4).num_edges() == 0);

  Graph c4 = cycle_graph(4);
  Graph cx = coxeter_graph(c4);
  CHECK(cx.num_edges() == 2);  // the two diagonals
  CHECK(cx.weights.empty());   // infinity encoded as absent weight

  // Dome graph of the 5-book: 7 edges on 5 vertices -> 3 complement edges.
  Pyramitoid y5 = n_book(5);
  std::set<int> dome(y5.lateral_faces().begin(), y5.lateral_faces().end());
  Graph g = defining_graph(y5.polyhedron(), dome);
  CHECK(coxeter_graph(g).num_edges() == 10 - 7);
}

TEST_CASE("racg presentations") {
  Graph two;
  two.vertices = {0, 1};
  GroupPresentation z2z2 = racg_presentation(two);
  CHECK(z2z2.generators.size() == 2);
  CHECK(z2z2.relations.size() == 2);  // involutions only: Z/2 * Z/2

  Graph one;
  one.vertices = {0};
  CHECK(racg_presentation(one).relations.size() == 1);  // Z/2

  GroupPresentation c5 = racg_presentation(cycle_graph(5));
  CHECK(c5.generators.size() == 5);
  CHECK(c5.relations.size() == 10);  // 5 involutions + 5 commutators
  CHECK(racg_presentation(cycle_graph(5)).relations.size() ==
        static_cast<size_t>(cycle_graph(5).num_vertices() +
                            cycle_graph(5).num_edges()));
}

TEST_CASE("splitting presentations add one commutator per arc") {
  Code north{4, {{0, 2}}}, south{4, {{1, 3}}};
  GroupPresentation p = bipyramitoid_pi1_presentation(north, south);
  CHECK(p.generators.size() == 4);
  CHECK(p.relations.size() == 4 + 4 + 2);
  CHECK(p.rho_images == std::vector<int>{0, 1, 2, 3});

  Code n5{5, {{1, 4}, {2, 4}}}, s5{5, {{0, 2}, {0, 3}}};
  CHECK(bipyramitoid_pi1_presentation(n5, s5).relations.size() == 5 + 5 + 4);

  Code n6{6, {{1, 3}, {3, 5}, {1, 5}}};
  CHECK(bipyramitoid_pi1_presentation(n6, n6).relations.size() == 6 + 6 + 6);

  CHECK_THROWS(bipyramitoid_pi1_presentation(north, n5));
}

TEST_CASE("text emissions are stable") {
  Graph g = cycle_graph(3);
  std::string dot = g.to_dot();
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  GroupPresentation p = racg_presentation(g, "x");
  std::string text = p.to_text();
  CHECK(text.find("generators: x0 x1 x2") == 0);
  CHECK(text.find("x0^2") != std::string::npos);
  CHECK(text.find("[x0,x1]") != std::string::npos);
}
