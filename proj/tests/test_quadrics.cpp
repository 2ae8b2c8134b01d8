#include "covers/quadrics.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

using namespace covers;

TEST_CASE("coordinate sum is identically one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  for (int n = 3; n <= 12; ++n) {
    AffineMap phi = polygon_support_lines(n);
    for (int s = 0; s < 50; ++s) {
      Eigen::VectorXd p(2);
      p << box(rng), box(rng);
      CHECK(std::abs(phi(p).sum() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("center and vertices of the polygon") {
  for (int n : {4, 5, 8}) {
    AffineMap phi = polygon_support_lines(n);
    Eigen::VectorXd center(2);
    center << 0.0, 0.0;
    Eigen::VectorXd r = phi(center);
    for (int j = 0; j < n; ++j) CHECK(r(j) == doctest::Approx(1.0 / n));
    // A vertex lies on exactly two supporting lines.
    Eigen::VectorXd v(2);
    v << std::cos(2 * std::numbers::pi / n), std::sin(2 * std::numbers::pi / n);
    Eigen::VectorXd rv = phi(v);
    int zeros = 0;
    for (int j = 0; j < n; ++j)
      if (std::abs(rv(j)) < 1e-12) ++zeros;
    CHECK(zeros == 2);
    CHECK(rv.minCoeff() > -1e-12);
  }
}

TEST_CASE("interior samples are strictly positive") {
  AffineMap phi = polygon_support_lines(5);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < 100; ++s) {
    double ang = 2 * std::numbers::pi * unit(rng);
    double rad = 0.5 * unit(rng);  // well inside the inradius
    Eigen::VectorXd p(2);
    p << rad * std::cos(ang), rad * std::sin(ang);
    CHECK(phi(p).minCoeff() > 0.0);
  }
}

TEST_CASE("relation coefficients at special n") {
  LinearSystem s4 = polygon_system(4);
  // tau = cos(pi/2) = 0: r_1 - r_4 + (r_3 - r_2) = 0.
  CHECK(s4.A(1, 0) == doctest::Approx(1.0));
  CHECK(s4.A(1, 1) == doctest::Approx(-1.0));
  CHECK(s4.A(1, 2) == doctest::Approx(1.0));
  CHECK(s4.A(1, 3) == doctest::Approx(-1.0));

  LinearSystem s6 = polygon_system(6);
  CHECK(s6.A(1, 2) == doctest::Approx(2.0));  // 2 tau + 1 = 2 at n = 6

  LinearSystem s5 = polygon_system(5);
  double golden = (std::sqrt(5.0) + 1.0) / 2.0;
  CHECK(s5.A(1, 2) == doctest::Approx(golden));  // 2 cos(72 deg) + 1
  CHECK(s5.equations() == 3);
}

TEST_CASE("system rank is n - 2") {
  for (int n = 4; n <= 12; ++n) CHECK(polygon_system(n).rank() == n - 2);
}

TEST_CASE("embedding residuals stay below tolerance") {
  for (int n = 3; n <= 12; ++n) {
    EmbeddingReport rep = verify_embedding(n, 100, 1e-9, 42 + n);
    CHECK(rep.samples == 100);
    CHECK(rep.max_residual < 1e-9);
  }
}

TEST_CASE("boundary samples stay within tolerance") {
  // Evaluate directly at a vertex (the extreme boundary case).
  AffineMap phi = polygon_support_lines(7);
  LinearSystem sys = polygon_system(7);
  Eigen::VectorXd v(2);
  v << 1.0, 0.0;
  CHECK(sys.residual(phi(v)) < 1e-9);
}

TEST_CASE("perturbed coefficients are detected") {
  AffineMap phi = polygon_support_lines(6);
  phi.coeffs(2, 0) += 1e-3;
  LinearSystem sys = polygon_system(6);
  Eigen::VectorXd p(2);
  p << 0.3, 0.2;
  CHECK(sys.residual(phi(p)) > 1e-9);
}

TEST_CASE("pyramid lift") {
  PyramidSystem ps = pyramid_system(5);
  Eigen::VectorXd apex(3);
  apex << 0.0, 0.0, 1.0;
  Eigen::VectorXd r = ps.map(apex);
  for (int j = 0; j < 5; ++j) CHECK(std::abs(r(j)) < 1e-15);
  CHECK(r(5) == doctest::Approx(1.0));

  // z = 0 restricts to the polygon map.
  AffineMap phi = polygon_support_lines(5);
  Eigen::VectorXd base(3);
  base << 0.2, -0.1, 0.0;
  Eigen::VectorXd rb = ps.map(base);
  Eigen::VectorXd p2(2);
  p2 << 0.2, -0.1;
  Eigen::VectorXd rphi = phi(p2);
  for (int j = 0; j < 5; ++j) CHECK(rb(j) == doctest::Approx(rphi(j)));
  CHECK(rb(5) == doctest::Approx(0.0));

  EmbeddingReport rep = verify_embedding(5, 100, 1e-9, 99, true);
  CHECK(rep.max_residual < 1e-9);
}

TEST_CASE("csv export shape") {
  std::string csv = quadrics_csv(3, 6, 20, 1e-9, 5);
  CHECK(csv.find("n,samples,max_residual,pass") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
