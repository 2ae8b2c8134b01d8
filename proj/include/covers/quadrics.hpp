#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace covers {

/// Affine map R^domain_dim -> R^codomain: one coefficient row per output
/// coordinate.  Rows are normalized so the output coordinates sum to 1
/// identically (the a- and b-columns each sum to 0, the constant column to 1).
struct AffineMap {
  int domain_dim = 2;
  Eigen::MatrixXd coeffs;  // codomain x (domain_dim + 1), last column constant

  int codomain_dim() const { return static_cast<int>(coeffs.rows()); }
  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const;
};

/// The affine relations cutting out the image plane: first row all ones with
/// right-hand side 1, then n-3 rows of the four-term pattern with
/// coefficient 2*tau + 1, tau = cos(2*pi/n).
struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd rhs;

  int equations() const { return static_cast<int>(A.rows()); }
  int unknowns() const { return static_cast<int>(A.cols()); }
  double residual(const Eigen::VectorXd& r) const;
  long long rank() const;
  std::string to_text() const;
};

/// Supporting lines of the regular n-gon (circumradius 1, vertices at
/// angles 2*pi*k/n), inward-positive, scaled so the coordinates sum to 1.
AffineMap polygon_support_lines(int n);

/// The n-2 affine equations satisfied by polygon_support_lines(n); needs
/// n >= 4 (only the sum equation exists at n = 3).
LinearSystem polygon_system(int n);

/// Lifted system for the pyramid over the n-gon with apex (0,0,1): the sum
/// equation gains the apex coordinate r_{n+1}; the other relations are
/// unchanged.
struct PyramidSystem {
  LinearSystem system;
  AffineMap map;  // Psi_n : R^3 -> R^{n+1}
};
PyramidSystem pyramid_system(int n);

struct EmbeddingReport {
  double max_affine_residual = 0;
  double max_quadric_residual = 0;
  double max_residual = 0;
  int samples = 0;
};

/// Sample the polygon (or solid pyramid when `pyramid`), push the samples
/// through the map, and evaluate both the affine system and its quadric lift
/// x_i = +-sqrt(r_i) under random signs.  Deterministic for a fixed seed.
EmbeddingReport verify_embedding(int n, int samples, double tol, uint64_t seed,
                                 bool pyramid = false);

/// CSV rows (n, samples, max_residual, pass) for 3 <= n <= n_max.
std::string quadrics_csv(int n_min, int n_max, int samples, double tol,
                         uint64_t seed);

}  // namespace covers
