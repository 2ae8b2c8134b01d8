#include "covers/polyhedron.hpp"

#include "doctest.h"

using namespace covers;

TEST_CASE("tetrahedron is a valid simple polyhedron") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  CHECK(t.validate().empty());
  CHECK(t.num_vertices() == 4);
  CHECK(t.num_edges() == 6);
  CHECK(t.num_faces() == 4);
  CHECK(t.euler_characteristic() == 2);
  CHECK(t.is_simple());
}

TEST_CASE("stock polyhedra validate") {
  CHECK(CombinatorialPolyhedron::cube().validate().empty());
  CHECK(CombinatorialPolyhedron::triangular_prism().validate().empty());
  CHECK(CombinatorialPolyhedron::pyramid(4).validate().empty());
  CHECK(CombinatorialPolyhedron::pyramid(7).validate().empty());
}

TEST_CASE("cube with one face listed as a 3-cycle is rejected") {
  auto faces = CombinatorialPolyhedron::cube().faces();
  faces[0] = {0, 3, 2};  // drops vertex 1 from the bottom face
  CombinatorialPolyhedron broken(CombinatorialPolyhedron::cube().vertex_ids(),
                                 faces);
  auto diag = broken.validate();
  CHECK(!diag.empty());
  bool mentions_edge = false;
  for (const auto& d : diag)
    if (d.find("face/edge mismatch") != std::string::npos) mentions_edge = true;
  CHECK(mentions_edge);
}

TEST_CASE("coherent orientation is enforced") {
  auto faces = CombinatorialPolyhedron::tetrahedron().faces();
  std::reverse(faces[1].begin(), faces[1].end());
  CombinatorialPolyhedron broken(faces);
  auto diag = broken.validate();
  bool mentions_direction = false;
  for (const auto& d : diag)
    if (d.find("same direction") != std::string::npos) mentions_direction = true;
  CHECK(mentions_direction);
}

TEST_CASE("prism JSON fixture round-trips and counts check out") {
  auto p = CombinatorialPolyhedron::triangular_prism();
  auto q = CombinatorialPolyhedron::from_json(p.to_json());
  CHECK(q.validate().empty());
  CHECK(q.num_vertices() - q.num_edges() + q.num_faces() == 2);
  CHECK(q.num_vertices() == 6);
  CHECK(q.num_edges() == 9);
}

TEST_CASE("pyramid apex valence breaks simplicity for n > 3") {
  CHECK_FALSE(CombinatorialPolyhedron::pyramid(4).is_simple());
  CHECK(CombinatorialPolyhedron::pyramid(4).vertex_valence(0) == 4);
  CHECK(CombinatorialPolyhedron::pyramid(3).is_simple());
}

TEST_CASE("incidence signs: two faces traverse each edge oppositely") {
  auto c = CombinatorialPolyhedron::cube();
  for (int e = 0; e < c.num_edges(); ++e) {
    auto f = c.faces_of_edge(e);
    CHECK(c.face_edge_sign(f[0], e) + c.face_edge_sign(f[1], e) == 0);
  }
}

TEST_CASE("isomorphism is label-independent") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  CombinatorialPolyhedron relabeled(
      {{10, 22, 11}, {10, 11, 33}, {10, 33, 22}, {11, 22, 33}});
  CHECK(relabeled.validate().empty());
  CHECK(t.isomorphic_to(relabeled));
  CHECK_FALSE(t.isomorphic_to(CombinatorialPolyhedron::cube()));
  CHECK(t.isomorphic_to(t.reflected()));
}
