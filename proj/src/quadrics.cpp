#include "covers/quadrics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace covers {

Eigen::VectorXd AffineMap::operator()(const Eigen::VectorXd& x) const {
  if (x.size() != domain_dim) throw std::invalid_argument("AffineMap: bad input");
  Eigen::VectorXd xa(domain_dim + 1);
  xa.head(domain_dim) = x;
  xa(domain_dim) = 1.0;
  return coeffs * xa;
}

double LinearSystem::residual(const Eigen::VectorXd& r) const {
  return (A * r - rhs).cwiseAbs().maxCoeff();
}

long long LinearSystem::rank() const {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  lu.setThreshold(1e-10);
  return lu.rank();
}

std::string LinearSystem::to_text() const {
  std::ostringstream os;
  os.precision(17);
  os << equations() << ' ' << unknowns() << '\n';
  for (int i = 0; i < equations(); ++i) {
    for (int j = 0; j < unknowns(); ++j) os << A(i, j) << (j + 1 < unknowns() ? ' ' : '\0');
    os << " | " << rhs(i) << '\n';
  }
  return os.str();
}

AffineMap polygon_support_lines(int n) {
  if (n < 3) throw std::invalid_argument("polygon_support_lines: need n >= 3");
  AffineMap phi;
  phi.domain_dim = 2;
  phi.coeffs.resize(n, 3);
  const double pi = std::numbers::pi;
  const double apothem = std::cos(pi / n);
  for (int j = 0; j < n; ++j) {
    // Outward normal of edge j (between vertices j and j+1).
    double theta = 2.0 * pi * (j + 0.5) / n;
    phi.coeffs(j, 0) = -std::cos(theta) / (n * apothem);
    phi.coeffs(j, 1) = -std::sin(theta) / (n * apothem);
    phi.coeffs(j, 2) = 1.0 / n;
  }
  return phi;
}

LinearSystem polygon_system(int n) {
  if (n < 4) throw std::invalid_argument("polygon_system: need n >= 4");
  LinearSystem sys;
  sys.A = Eigen::MatrixXd::Zero(n - 2, n);
  sys.rhs = Eigen::VectorXd::Zero(n - 2);
  sys.A.row(0).setOnes();
  sys.rhs(0) = 1.0;
  const double tau = std::cos(2.0 * std::numbers::pi / n);
  for (int i = 0; i + 3 < n; ++i) {
    // r_i - r_{i+3} + (2 tau + 1)(r_{i+2} - r_{i+1}) = 0
    sys.A(i + 1, i) = 1.0;
    sys.A(i + 1, i + 3) = -1.0;
    sys.A(i + 1, i + 2) = 2.0 * tau + 1.0;
    sys.A(i + 1, i + 1) = -(2.0 * tau + 1.0);
  }
  return sys;
}

PyramidSystem pyramid_system(int n) {
  if (n < 4) throw std::invalid_argument("pyramid_system: need n >= 4");
  PyramidSystem out;
  LinearSystem base = polygon_system(n);
  out.system.A = Eigen::MatrixXd::Zero(n - 2, n + 1);
  out.system.A.block(0, 0, n - 2, n) = base.A;
  out.system.A(0, n) = 1.0;  // apex coordinate joins the sum equation
  out.system.rhs = base.rhs;

  AffineMap phi = polygon_support_lines(n);
  out.map.domain_dim = 3;
  out.map.coeffs = Eigen::MatrixXd::Zero(n + 1, 4);
  for (int j = 0; j < n; ++j) {
    out.map.coeffs(j, 0) = phi.coeffs(j, 0);
    out.map.coeffs(j, 1) = phi.coeffs(j, 1);
    out.map.coeffs(j, 2) = -phi.coeffs(j, 2);  // c_j (1 - z)
    out.map.coeffs(j, 3) = phi.coeffs(j, 2);
  }
  out.map.coeffs(n, 2) = 1.0;  // last coordinate is z itself
  return out;
}

namespace {

// Uniform point of the regular n-gon: uniform triangle of the fan, then
// uniform in the triangle.
Eigen::Vector2d sample_polygon(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int k = pick(rng);
  const double pi = std::numbers::pi;
  Eigen::Vector2d v1(std::cos(2 * pi * k / n), std::sin(2 * pi * k / n));
  Eigen::Vector2d v2(std::cos(2 * pi * (k + 1) / n), std::sin(2 * pi * (k + 1) / n));
  double a = unit(rng), b = unit(rng);
  if (a + b > 1) {
    a = 1 - a;
    b = 1 - b;
  }
  return a * v1 + b * v2;
}

double quadric_residual(const LinearSystem& sys, const Eigen::VectorXd& r,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  Eigen::VectorXd x(r.size());
  for (int i = 0; i < r.size(); ++i) {
    double v = std::sqrt(std::max(0.0, r(i)));
    x(i) = coin(rng) ? v : -v;
  }
  Eigen::VectorXd xsq = x.cwiseProduct(x);
  return sys.residual(xsq);
}

}  // namespace

EmbeddingReport verify_embedding(int n, int samples, double tol, uint64_t seed,
                                 bool pyramid) {
  (void)tol;
  std::mt19937_64 rng(seed);
  EmbeddingReport rep;
  rep.samples = samples;

  LinearSystem sys;
  AffineMap map;
  if (pyramid) {
    PyramidSystem ps = pyramid_system(n);
    sys = ps.system;
    map = ps.map;
  } else if (n >= 4) {
    sys = polygon_system(n);
    map = polygon_support_lines(n);
  } else {
    // n = 3: only the sum equation.
    sys.A = Eigen::MatrixXd::Ones(1, 3);
    sys.rhs = Eigen::VectorXd::Ones(1);
    map = polygon_support_lines(n);
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    Eigen::Vector2d p = sample_polygon(n, rng);
    Eigen::VectorXd input;
    if (pyramid) {
      // Volume-uniform height (cross sections scale like (1-z)^2), base
      // point shrunk toward the apex.
      double z = 1.0 - std::cbrt(unit(rng));
      input.resize(3);
      input << p.x() * (1.0 - z), p.y() * (1.0 - z), z;
    } else {
      input = p;
    }
    Eigen::VectorXd r = map(input);
    rep.max_affine_residual = std::max(rep.max_affine_residual, sys.residual(r));
    rep.max_quadric_residual =
        std::max(rep.max_quadric_residual, quadric_residual(sys, r, rng));
  }
  rep.max_residual = std::max(rep.max_affine_residual, rep.max_quadric_residual);
  return rep;
}

std::string quadrics_csv(int n_min, int n_max, int samples, double tol,
                         uint64_t seed) {
  std::ostringstream os;
  os << "n,samples,max_residual,pass\n";
  os.precision(3);
  for (int n = n_min; n <= n_max; ++n) {
    EmbeddingReport rep = verify_embedding(n, samples, tol, seed);
    os << n << ',' << samples << ',' << std::scientific << rep.max_residual
       << ',' << (rep.max_residual < tol ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace covers
