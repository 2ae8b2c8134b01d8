#include "covers/small_cover.hpp"

#include <set>

#include "covers/errors.hpp"
#include "covers/homology.hpp"
#include "doctest.h"

using namespace covers;

namespace {
std::set<int> all_faces(const CombinatorialPolyhedron& p) {
  std::set<int> s;
  for (int f = 0; f < p.num_faces(); ++f) s.insert(f);
  return s;
}

std::vector<long long> cell_counts(const SmallCoverComplex& cx) {
  std::vector<long long> out;
  for (int d = 0; d <= cx.dim(); ++d) out.push_back(cx.cells_in_dim(d));
  return out;
}
}  // namespace

TEST_CASE("tetrahedron full cover cell counts") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  SmallCoverComplex cx = small_cover_complex(t, all_faces(t));
  CHECK(cell_counts(cx) == std::vector<long long>{8, 24, 32, 16});
  CHECK(cx.euler_characteristic() == 0);
  CHECK(check_dd_zero(cx));
}

TEST_CASE("square polygon full cover is a torus") {
  SmallCoverComplex cx = polygon_cover(4);
  CHECK(cell_counts(cx) == std::vector<long long>{16, 32, 16});
  CHECK(cx.euler_characteristic() == 0);
  CHECK(check_dd_zero(cx));
  CHECK(is_closed_pseudomanifold(cx));
}

TEST_CASE("5-book full cover cell counts") {
  Pyramitoid y5 = n_book(5);
  SmallCoverComplex cx =
      small_cover_complex(y5.polyhedron(), all_faces(y5.polyhedron()));
  CHECK(cell_counts(cx) == std::vector<long long>{64, 192, 192, 64});
  CHECK(cx.euler_characteristic() == 0);
}

TEST_CASE("cell counts follow the 2^(m-k) formula") {
  for (int n = 4; n <= 6; ++n) {
    Pyramitoid pyr = n_book(n);
    const auto& poly = pyr.polyhedron();
    SmallCoverComplex cx = small_cover_complex(poly, all_faces(poly));
    const int m = poly.num_faces();
    long long expect0 = 0;
    for (int v : poly.vertex_ids())
      expect0 += 1ll << (m - poly.faces_of_vertex(v).size());
    CHECK(cx.cells_in_dim(0) == expect0);
    CHECK(cx.cells_in_dim(1) == poly.num_edges() * (1ll << (m - 2)));
    CHECK(cx.cells_in_dim(2) == poly.num_faces() * (1ll << (m - 1)));
    CHECK(cx.cells_in_dim(3) == 1ll << m);
  }
}

TEST_CASE("dd = 0 across all classes n <= 7 and both mirror variants") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& rep : rotation_class_representatives(n)) {
      Pyramitoid pyr = pyramitoid_from_triangulation(rep);
      const auto& poly = pyr.polyhedron();
      SmallCoverComplex full = small_cover_complex(poly, all_faces(poly));
      CHECK(check_dd_zero(full));
      std::set<int> dome(pyr.lateral_faces().begin(), pyr.lateral_faces().end());
      SmallCoverComplex dc = small_cover_complex(poly, dome);
      CHECK(check_dd_zero(dc));
    }
  }
}

TEST_CASE("polygon cover with one free edge has circle boundary") {
  std::set<int> partial{0, 1, 2, 3};
  SmallCoverComplex cx = polygon_cover(5, &partial);
  CHECK(check_dd_zero(cx));
  BoundarySubcomplex bs = boundary_subcomplex(cx);
  // Cells over the free edge: 2^4 edge lifts, every vertex lift in two.
  CHECK(bs.complex.cells_in_dim(1) == 16);
  CHECK(bs.complex.cells_in_dim(0) == 16);
  CHECK(is_closed_pseudomanifold(bs.complex));
  CHECK(bs.complex.euler_characteristic() == 0);
}

TEST_CASE("a flipped sign breaks dd = 0") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  SmallCoverComplex cx = small_cover_complex(t, all_faces(t));
  SparseIntMatrix b1 = cx.boundary(1);
  SparseIntMatrix b2 = cx.boundary(2);
  SparseIntMatrix bad(b2.rows(), b2.cols());
  bool flipped = false;
  for (const auto& tr : b2.triplets()) {
    Int v = tr.value;
    if (!flipped) {
      v = -v;
      flipped = true;
    }
    bad.add(tr.row, tr.col, v);
  }
  CHECK_FALSE(b1.multiply(bad).is_zero());
}

TEST_CASE("boundary subcomplex of a dome cover is a closed surface") {
  Pyramitoid y4(CombinatorialPolyhedron::triangular_prism(), 2);
  DomeCover dc4 = build_dome_cover(y4);
  CHECK(cell_counts(dc4.surface) == std::vector<long long>{16, 32, 16});
  CHECK(dc4.surface.euler_characteristic() == 0);  // genus 1
  CHECK(is_closed_pseudomanifold(dc4.surface));

  DomeCover dc5 = build_dome_cover(n_book(5));
  CHECK(dc5.surface.euler_characteristic() == -8);  // genus 5
  CHECK(is_closed_pseudomanifold(dc5.surface));
  CHECK(check_dd_zero(dc5.dome));
  CHECK(check_dd_zero(dc5.surface));
}

TEST_CASE("full-mirror boundary subcomplex is empty") {
  auto t = CombinatorialPolyhedron::tetrahedron();
  SmallCoverComplex cx = small_cover_complex(t, all_faces(t));
  BoundarySubcomplex bs = boundary_subcomplex(cx);
  for (int d = 0; d <= bs.complex.dim(); ++d)
    CHECK(bs.complex.cells_in_dim(d) == 0);
}

TEST_CASE("core graph betti numbers equal b_n") {
  Pyramitoid y4(CombinatorialPolyhedron::triangular_prism(), 2);
  Graph g4 = core_graph(build_dome_cover(y4));
  CHECK(g4.num_edges() == 4);  // one circle of four copies
  CHECK(g4.first_betti() == 1);

  Graph g5 = core_graph(build_dome_cover(n_book(5)));
  CHECK(g5.first_betti() == 5);

  Triangulation hex{6, {{1, 3}, {3, 5}, {1, 5}}};  // label (020202)
  Graph g6 = core_graph(build_dome_cover(pyramitoid_from_triangulation(hex)));
  CHECK(g6.first_betti() == 17);
}

TEST_CASE("each core edge lifts to 2^(n-2) edges in 4-edge circles") {
  for (int n = 4; n <= 6; ++n) {
    Pyramitoid pyr = n_book(n);
    DomeCover dc = build_dome_cover(pyr);
    for (int e : pyr.core_tree()) {
      // Count lifts of this single edge and the circle structure.
      Graph g;
      int base_e = dc.dome.base_cell_index(1, e);
      uint32_t sp = dc.dome.span(1, base_e);
      const Edge& ed = pyr.polyhedron().edges()[e];
      int bt = dc.dome.base_cell_index(0, ed.tail);
      int bh = dc.dome.base_cell_index(0, ed.head);
      std::set<int> verts;
      long long count = 0;
      for (uint32_t s = 0; s < (1u << n); ++s) {
        if (s & sp) continue;
        ++count;
        int vt = static_cast<int>(dc.dome.cell_id(0, bt, s));
        int vh = static_cast<int>(dc.dome.cell_id(0, bh, s));
        g.add_edge(vt, vh);
        verts.insert(vt);
        verts.insert(vh);
      }
      CHECK(count == (1ll << (n - 2)));
      g.vertices.assign(verts.begin(), verts.end());
      // Circles of 4 edges each: E = V and E/4 components.
      CHECK(g.num_edges() == count);
      CHECK(g.num_vertices() == count);
      CHECK(g.num_components() == count / 4);
    }
  }
}

TEST_CASE("lifted code arcs: counts and closure") {
  Pyramitoid y4(CombinatorialPolyhedron::triangular_prism(), 2);
  DomeCover dc4 = build_dome_cover(y4);
  auto circles4 = lift_arcs(dc4, code_of(y4));
  CHECK(circles4.size() == 4);  // 2^{n-2} circles from the single arc

  Pyramitoid y5 = n_book(5);
  DomeCover dc5 = build_dome_cover(y5);
  auto circles5 = lift_arcs(dc5, code_of(y5));
  CHECK(circles5.size() == 16);  // (n-3) 2^{n-2} = 2 * 8

  for (const auto& c : circles5) {
    CHECK(c.face_cells.size() == 4);
    CHECK(c.edge_cells.size() == 4);
    std::set<long long> faces(c.face_cells.begin(), c.face_cells.end());
    CHECK(faces.size() == 4);
  }
}

TEST_CASE("lifted circles bound in the handlebody, not on the surface") {
  for (int n : {4, 5}) {
    Pyramitoid pyr = n_book(n);
    DomeCover dc = build_dome_cover(pyr);
    auto circles = lift_arcs(dc, code_of(pyr));
    // Surface 1-cycles: nontrivial in H_1(F); dome 1-cycles: bound.
    SmithResult surf2 = smith_normal_form(dc.surface.boundary(2), true, false);
    SmithResult dome2 = smith_normal_form(dc.dome.boundary(2), true, false);
    for (size_t k = 0; k < circles.size(); k += 3) {
      std::vector<Int> z = circle_chain(dc, circles[k]);
      // It is a cycle.
      std::vector<Int> dz = matvec(dc.surface.boundary(1), z);
      for (const auto& v : dz) CHECK(v == 0);
      CHECK_FALSE(in_image(surf2, z));
      // Push to the dome complex and check it bounds there.
      std::vector<Int> zd(dc.dome.cells_in_dim(1), 0);
      for (size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) zd[dc.surf_to_dome[1][i]] = z[i];
      CHECK(in_image(dome2, zd));
    }
  }
}

TEST_CASE("complex dump lists every dimension") {
  SmallCoverComplex cx = polygon_cover(4);
  std::string d = cx.dump();
  CHECK(d.find("cells 0 16") != std::string::npos);
  CHECK(d.find("cells 2 16") != std::string::npos);
  CHECK(d.find("boundary 2") != std::string::npos);
}
