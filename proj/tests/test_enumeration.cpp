#include "covers/triangulation.hpp"

#include <set>

#include "covers/errors.hpp"
#include "doctest.h"

using namespace covers;

TEST_CASE("catalan numbers, closed form against enumeration") {
  CHECK(catalan_count(3) == 1);
  CHECK(catalan_count(4) == 2);
  CHECK(catalan_count(6) == 14);
  CHECK(catalan_count(8) == 132);
  for (int n = 3; n <= 10; ++n)
    CHECK(static_cast<long long>(enumerate_triangulations(n).size()) ==
          catalan_count(n));
  CHECK_THROWS_AS(enumerate_triangulations(15), EnumerationCapExceeded);
}

TEST_CASE("enumeration is duplicate-free and valid") {
  for (int n = 4; n <= 8; ++n) {
    auto all = enumerate_triangulations(n);
    std::set<std::vector<std::pair<int, int>>> dedup;
    for (const auto& t : all) {
      CHECK(t.is_valid());
      dedup.insert(t.diagonals);
    }
    CHECK(dedup.size() == all.size());
  }
}

TEST_CASE("rotation classes match the known sequence") {
  CHECK(count_rotation_classes(4) == 1);
  CHECK(count_rotation_classes(5) == 1);
  CHECK(count_rotation_classes(6) == 4);
  CHECK(count_rotation_classes(7) == 6);
  CHECK(count_rotation_classes(8) == 19);
}

TEST_CASE("burnside cross-check") {
  for (int n = 4; n <= 10; ++n)
    CHECK(count_rotation_classes_burnside(n) == count_rotation_classes(n));
}

TEST_CASE("orbit structure") {
  // All five pentagon triangulations form one rotation orbit.
  CHECK(orbit_profile(5) == std::vector<int>{5});
  CHECK(orbit_profile(6) == std::vector<int>{6, 3, 3, 2});
  for (int n = 4; n <= 9; ++n) {
    long long total = 0;
    for (const auto& rep : rotation_class_representatives(n))
      total += rep.orbit_size();
    CHECK(total == catalan_count(n));
  }
}

TEST_CASE("square with one diagonal becomes the triangular prism") {
  Triangulation t{4, {{1, 3}}};
  Pyramitoid pyr = pyramitoid_from_triangulation(t);
  CHECK(pyr.polyhedron().validate().empty());
  CHECK(pyr.polyhedron().isomorphic_to(
      CombinatorialPolyhedron::triangular_prism()));
  CHECK(triangulation_of(pyr) == t);
}

TEST_CASE("pentagon fan gives the (01102) pyramitoid") {
  Triangulation t{5, {{0, 2}, {2, 4}}};
  Pyramitoid pyr = pyramitoid_from_triangulation(t);
  CHECK(pyr.is_simple());
  CHECK(pyr.label().cyclically_equal(Label{{0, 1, 1, 0, 2}}));
}

TEST_CASE("hexagon fan triangulation carries the n-gon face") {
  // Vertex 5 meets three diagonals, so its lateral face is the hexagon;
  // the label sums to 2(n-3) = 6.
  Triangulation t{6, {{1, 5}, {2, 5}, {3, 5}}};
  Pyramitoid pyr = pyramitoid_from_triangulation(t);
  CHECK(pyr.label().cyclically_equal(Label{{0, 1, 1, 1, 0, 3}}));
  int sum = 0;
  for (int b : pyr.label().entries) sum += b;
  CHECK(sum == 6);
}

TEST_CASE("triangulation round-trip across all classes") {
  for (int n = 4; n <= 8; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      Pyramitoid pyr = pyramitoid_from_triangulation(t);
      CHECK(pyr.is_simple());
      CHECK(triangulation_of(pyr) == t);
    }
}

TEST_CASE("sampled round-trips and counts at n = 10") {
  auto all = enumerate_triangulations(10);
  for (size_t k = 0; k < all.size(); k += 47) {
    Pyramitoid pyr = pyramitoid_from_triangulation(all[k]);
    CHECK(pyr.polyhedron().validate().empty());
    CHECK(pyr.is_simple());
    CHECK(pyr.polyhedron().num_vertices() == 18);
    CHECK(pyr.polyhedron().num_edges() == 27);
    CHECK(triangulation_of(pyr) == all[k]);
    CHECK(validate_label(pyr.label(), 10));
  }
}

TEST_CASE("codes are valid and dual to the core tree") {
  Pyramitoid prism(CombinatorialPolyhedron::triangular_prism(), 2);
  Code c = code_of(prism);
  CHECK(c.arcs.size() == 1);
  // The single arc joins opposite basis edges.
  CHECK((c.arcs[0].second - c.arcs[0].first) == 2);

  Pyramitoid y5 = n_book(5);
  Code c5 = code_of(y5);
  CHECK(c5.arcs.size() == 2);
  CHECK(c5.is_valid());

  Code c6 = code_of(n_book(6));
  CHECK(c6.is_valid());
  CHECK(c6.arcs.size() == 3);
}

TEST_CASE("cell types follow core-tree valences") {
  auto [cells4, stats4] =
      code_cells(Pyramitoid(CombinatorialPolyhedron::triangular_prism(), 2));
  CHECK(stats4.m1 == 2);
  CHECK(stats4.m2 == 0);
  CHECK(stats4.m3 == 0);
  CHECK(cells4 == std::vector<CellType>{CellType::I, CellType::I});

  auto [cells5, stats5] = code_cells(n_book(5));
  CHECK(stats5.m1 == 2);
  CHECK(stats5.m2 == 1);
  CHECK(stats5.m3 == 0);

  for (int n = 4; n <= 8; ++n)
    for (const auto& rep : rotation_class_representatives(n)) {
      auto [cells, stats] = code_cells(pyramitoid_from_triangulation(rep));
      CHECK(stats.total() == n - 2);
      CHECK(stats.m2 == n - 2 * stats.m1);
      CHECK(stats.m3 == stats.m1 - 2);
    }
}

TEST_CASE("no simple pyramitoid has adjacent triangles unless n = 3") {
  for (int n = 4; n <= 8; ++n)
    for (const auto& rep : rotation_class_representatives(n)) {
      Label l = pyramitoid_from_triangulation(rep).label();
      for (int i = 0; i < n; ++i)
        CHECK(l.entries[i] + l.entries[(i + 1) % n] > 0);
    }
}

TEST_CASE("ball decomposition counts") {
  Pyramitoid y5 = n_book(5);  // m1 = 2
  BallCounts b5 = ball_decomposition_counts(y5);
  CHECK(b5.balls_full == 12);
  CHECK(b5.balls_reduced == 4);
  CHECK(b5.meridians_reduced == 8);

  Triangulation hex{6, {{1, 3}, {3, 5}, {1, 5}}};  // label (020202), m1 = 3
  BallCounts b6 = ball_decomposition_counts(pyramitoid_from_triangulation(hex));
  CHECK(b6.balls_full == 32);
  CHECK(b6.balls_reduced == 8);
  CHECK(b6.meridians_reduced == 24);

  BallCounts b4 = ball_decomposition_counts(
      Pyramitoid(CombinatorialPolyhedron::triangular_prism(), 2));
  CHECK(b4.balls_full == 4);
  CHECK(b4.balls_reduced == -1);  // reduced form needs n > 4
}

TEST_CASE("smoothing options per valence") {
  CHECK(smoothing_options(4).size() == 1);
  CHECK(smoothing_options(6).size() == 4);
  CHECK(smoothing_options(8).size() == 19);
  for (const auto& pyr : smoothing_options(6)) CHECK(pyr.is_simple());
}

TEST_CASE("label realizability") {
  CHECK(label_realizable(Label{{0, 1, 0, 1}}));
  CHECK(label_realizable(Label{{0, 1, 1, 0, 2}}));
  // Passes the necessary conditions but contains 0,1,0 with n > 4.
  Label fake{{0, 1, 0, 1, 2, 2}};
  CHECK(validate_label(fake, 6));
  CHECK_FALSE(label_realizable(fake));
  // Every label of the 19 classes at n = 8 is realizable by construction.
  for (const auto& rep : rotation_class_representatives(8))
    CHECK(label_realizable(pyramitoid_from_triangulation(rep).label()));
}

TEST_CASE("basis count: books have several bases, everything else one") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& rep : rotation_class_representatives(n)) {
      Pyramitoid pyr = pyramitoid_from_triangulation(rep);
      Label l = pyr.label();
      int maxb = *std::max_element(l.entries.begin(), l.entries.end());
      size_t bases = find_bases(pyr.polyhedron()).size();
      if (maxb == n - 3 && n > 4) {
        // An n-gon lateral face: the class is the n-book.
        CHECK(bases == (n == 4 ? 3 : 2));
      } else if (n == 4) {
        CHECK(bases == 3);  // the prism = 4-book
      } else {
        CHECK(bases == 1);
      }
    }
  }
}

TEST_CASE("hexagon classes carry the expected labels") {
  std::set<std::vector<int>> labels;
  for (const auto& rep : rotation_class_representatives(6))
    labels.insert(pyramitoid_from_triangulation(rep).label().canonical().entries);
  std::set<std::vector<int>> expect{{0, 1, 1, 1, 0, 3},
                                    {0, 2, 1, 0, 2, 1},
                                    {0, 1, 2, 0, 1, 2},
                                    {0, 2, 0, 2, 0, 2}};
  CHECK(labels == expect);
}
