#include "covers/surgery.hpp"

#include "covers/errors.hpp"
#include "doctest.h"

using namespace covers;

namespace {
Pyramitoid prism_pyr() {
  return Pyramitoid(CombinatorialPolyhedron::triangular_prism(), 2);
}

const std::vector<std::pair<int, int>> kTetraEquator{{0, 3}, {0, 1}, {1, 2}, {2, 3}};
const std::vector<std::pair<int, int>> kPrismEquator{
    {0, 1}, {3, 4}, {4, 5}, {2, 5}, {0, 2}};
const std::vector<std::pair<int, int>> kCubeEquator{
    {1, 2}, {1, 5}, {4, 5}, {4, 7}, {3, 7}, {2, 3}};
}  // namespace

TEST_CASE("gluing two prisms gives the tetrahedron") {
  Bipyramitoid b = glue_bipyramitoid(prism_pyr(), prism_pyr(), Matching{1, false});
  CHECK(b.glued().validate().empty());
  CHECK(b.glued().num_faces() == 4);
  CHECK(b.glued().isomorphic_to(CombinatorialPolyhedron::tetrahedron()));
}

TEST_CASE("gluing two 5-books gives the triangular prism") {
  Bipyramitoid b = glue_bipyramitoid(n_book(5), n_book(5), Matching{2, false});
  CHECK(b.glued().validate().empty());
  CHECK(b.glued().isomorphic_to(CombinatorialPolyhedron::triangular_prism()));
}

TEST_CASE("gluing two (020202) halves gives the cube") {
  Triangulation hex{6, {{1, 3}, {3, 5}, {1, 5}}};
  Pyramitoid half = pyramitoid_from_triangulation(hex);
  Bipyramitoid b = glue_bipyramitoid(half, half, Matching{1, false});
  CHECK(b.glued().validate().empty());
  CHECK(b.glued().isomorphic_to(CombinatorialPolyhedron::cube()));
}

TEST_CASE("basis size mismatch is rejected") {
  CHECK_THROWS_AS(glue_bipyramitoid(prism_pyr(), n_book(5), Matching{0, false}),
                  BasisMismatch);
}

TEST_CASE("splitting the tetrahedron yields two prisms") {
  Bipyramitoid b =
      split_bipyramitoid(CombinatorialPolyhedron::tetrahedron(), kTetraEquator);
  CHECK(b.north().n() == 4);
  CHECK(b.north().label().cyclically_equal(Label{{0, 1, 0, 1}}));
  CHECK(b.south().label().cyclically_equal(Label{{0, 1, 0, 1}}));
  CHECK(b.north().polyhedron().isomorphic_to(
      CombinatorialPolyhedron::triangular_prism()));
  CHECK(b.glued().isomorphic_to(CombinatorialPolyhedron::tetrahedron()));
}

TEST_CASE("splitting the cube yields two (020202) halves") {
  Bipyramitoid b =
      split_bipyramitoid(CombinatorialPolyhedron::cube(), kCubeEquator);
  CHECK(b.north().n() == 6);
  CHECK(b.north().core_tree().size() == 3);
  CHECK(b.south().core_tree().size() == 3);
  CHECK(b.north().label().cyclically_equal(Label{{0, 2, 0, 2, 0, 2}}));
  CHECK(b.glued().isomorphic_to(CombinatorialPolyhedron::cube()));
}

TEST_CASE("splitting the prism yields two 5-pyramitoids") {
  Bipyramitoid b = split_bipyramitoid(CombinatorialPolyhedron::triangular_prism(),
                                      kPrismEquator);
  CHECK(b.north().n() == 5);
  CHECK(b.north().label().cyclically_equal(Label{{0, 1, 1, 0, 2}}));
  CHECK(b.glued().isomorphic_to(CombinatorialPolyhedron::triangular_prism()));
}

TEST_CASE("equator validation") {
  auto prism = CombinatorialPolyhedron::triangular_prism();
  // Misses the top triangle entirely.
  CHECK_THROWS_AS(split_bipyramitoid(
                      prism, {{0, 1}, {1, 4}, {1, 2}, {0, 2}, {0, 3}}),
                  EquatorInvalid);
  // Wrong number of crossings.
  CHECK_THROWS_AS(split_bipyramitoid(prism, {{0, 1}, {1, 2}, {0, 2}}),
                  EquatorInvalid);
  // Not even edges.
  CHECK_THROWS_AS(split_bipyramitoid(prism, {{0, 5}, {0, 1}, {1, 2}, {2, 3}, {3, 4}}),
                  EquatorInvalid);
}

TEST_CASE("heegaard data of the three classical splittings") {
  Bipyramitoid tetra =
      split_bipyramitoid(CombinatorialPolyhedron::tetrahedron(), kTetraEquator);
  HeegaardData ht = heegaard_data(tetra);
  CHECK(ht.genus == 1);
  CHECK(ht.north_meridians.size() == 4);  // 2^{n-2} circles of the single arc
  CHECK(ht.south_meridians.size() == 4);
  // Every north circle meets every south circle exactly once.
  for (const auto& row : ht.intersections)
    for (int v : row) CHECK(v == 1);

  Bipyramitoid prism = split_bipyramitoid(
      CombinatorialPolyhedron::triangular_prism(), kPrismEquator);
  HeegaardData hp = heegaard_data(prism);
  CHECK(hp.genus == 5);
  CHECK(hp.north_meridians.size() == 2 * 8);

  Bipyramitoid cube =
      split_bipyramitoid(CombinatorialPolyhedron::cube(), kCubeEquator);
  HeegaardData hc = heegaard_data(cube);
  CHECK(hc.genus == 17);
  CHECK(hc.north_meridians.size() == 3 * 16);
  std::string j = hc.to_json();
  CHECK(j.find("\"genus\": 17") != std::string::npos);
}

TEST_CASE("homology agreement both ways on the classical bipyramitoids") {
  auto check = [](const CombinatorialPolyhedron& poly,
                  const std::vector<std::pair<int, int>>& eq,
                  std::vector<long long> expect) {
    Bipyramitoid b = split_bipyramitoid(poly, eq);
    TwoWayHomology tw = z_homology_two_ways(b);
    CHECK(tw.agree);
    CHECK(betti_numbers(tw.direct) == expect);
    for (const auto& g : tw.direct) CHECK(g.is_free());
  };
  check(CombinatorialPolyhedron::tetrahedron(), kTetraEquator, {1, 0, 0, 1});
  check(CombinatorialPolyhedron::triangular_prism(), kPrismEquator, {1, 1, 1, 1});
  check(CombinatorialPolyhedron::cube(), kCubeEquator, {1, 3, 3, 1});
}

TEST_CASE("heegaard genus equals b_n for glued halves") {
  Bipyramitoid b = glue_bipyramitoid(n_book(5), n_book(5), Matching{2, false});
  CHECK(heegaard_data(b).genus == 5);
  CHECK(heegaard_data(b).genus == b_n_formula(5));
}

TEST_CASE("re-splitting along the stored equator recovers the halves") {
  Triangulation hex{6, {{1, 3}, {3, 5}, {1, 5}}};
  Pyramitoid half = pyramitoid_from_triangulation(hex);
  // Odd offsets keep the (020202) triangles away from the book's zeros.
  Bipyramitoid b = glue_bipyramitoid(half, n_book(6), Matching{3, false});
  Bipyramitoid again = split_bipyramitoid(b.glued(), b.equator());
  CHECK(again.north().label().cyclically_equal(b.north().label()));
  CHECK(again.south().label().cyclically_equal(b.south().label()));
  CHECK(again.glued().isomorphic_to(b.glued()));
}

TEST_CASE("mixed hexagon halves: both homology routes agree") {
  // Glue representatives of two different classes at every admissible offset.
  auto reps = rotation_class_representatives(6);
  Pyramitoid a = pyramitoid_from_triangulation(reps[1]);
  Pyramitoid c = pyramitoid_from_triangulation(reps[3]);
  int tested = 0;
  for (int offset = 0; offset < 6 && tested < 2; ++offset) {
    for (bool flip : {false, true}) {
      Bipyramitoid b;
      try {
        b = glue_bipyramitoid(a, c, Matching{offset, flip});
      } catch (const BasisMismatch&) {
        continue;  // a matched pair of triangles; try the next offset
      }
      CHECK(b.glued().validate().empty());
      CHECK(heegaard_data(b).genus == b_n_formula(6));
      TwoWayHomology tw = z_homology_two_ways(b);
      CHECK(tw.agree);
      ++tested;
    }
  }
  CHECK(tested >= 2);
}

TEST_CASE("trapezohedra") {
  CombinatorialPolyhedron t3 = trapezohedron_polyhedron(3);
  CHECK(t3.validate().empty());
  CHECK(t3.is_simple());
  CHECK(t3.isomorphic_to(CombinatorialPolyhedron::cube()));

  CombinatorialPolyhedron t4 = trapezohedron_polyhedron(4);
  CHECK(t4.validate().empty());
  CHECK_FALSE(t4.is_simple());  // two apices of valence 4
  CHECK(t4.num_faces() == 8);
  for (const auto& f : t4.faces()) CHECK(f.size() == 4);

  Bipyramitoid b4 = trapezohedron(4);
  CHECK(b4.n() == 8);
  CHECK(b4.glued().isomorphic_to(t4));
  CHECK_FALSE(b4.north().is_simple());
}

TEST_CASE("smoothings of the 4-trapezohedron") {
  auto codes = trapezohedron_smoothing_codes(4);
  CHECK(codes.size() == 2);  // the two inner diagonals of the octagon
  for (const auto& c : codes) CHECK(c.is_valid());

  // All four combinations give the same polyhedron.
  CombinatorialPolyhedron first = gyrobipentaprism();
  CHECK(first.validate().empty());
  CHECK(first.is_simple());
  CHECK(first.num_faces() == 8);
  for (const auto& cn : codes)
    for (const auto& cs : codes) {
      Bipyramitoid b = smooth_trapezohedron(4, cn, cs);
      CHECK(b.glued().validate().empty());
      CHECK(b.glued().isomorphic_to(first));
    }

  // Cube as the smoothing-free case: n = 3 codes admit no inner diagonal.
  auto c3 = trapezohedron_smoothing_codes(3);
  CHECK(c3.size() == 1);
  Bipyramitoid b3 = smooth_trapezohedron(3, c3.front(), c3.front());
  CHECK(b3.glued().isomorphic_to(CombinatorialPolyhedron::cube()));

  // Alternation violations are rejected.
  Code bad{8, {{0, 2}, {2, 4}, {4, 6}, {0, 6}, {0, 4}}};
  CHECK_THROWS_AS(smooth_trapezohedron(4, bad, bad), CodeAlternationViolated);
}

TEST_CASE("gyrobipentaprism heegaard genus is b_8") {
  auto codes = trapezohedron_smoothing_codes(4);
  Bipyramitoid b = smooth_trapezohedron(4, codes.front(), codes.front());
  HeegaardData hd = heegaard_data(b);
  CHECK(hd.genus == 129);
  CHECK(hd.north_meridians.size() == 5 * 64);
}
