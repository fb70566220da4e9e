#pragma once

// Gaussian quadrature rules for the two measures the library integrates
// against, built by Golub-Welsch from the Jacobi matrices of the associated
// orthogonal polynomials:
//
//   * gauss_laguerre:    x^alpha e^{-x} dx on (0, inf),
//   * gauss_jacobi_unit: t^{beta-1} (1-t)^{eta-1} dt on (0, 1),
//   * disk_rule:         the product rule on the unit disk for the radial
//                        measure above in t = |p|^2 together with uniform
//                        angles; it integrates p^m conj(p)^n exactly while
//                        m+n stays within the radial degree window and
//                        |m-n| < Ntheta.
//
// All rule sizes used by the tests and the verification suite are chosen in
// this repository; nothing here adapts automatically.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fhankel/quaternion.hpp"
#include "fhankel/special.hpp"
#include "fhankel/tridiag.hpp"

namespace fhankel {

inline constexpr int default_halfline_nodes = 200;
inline constexpr int default_disk_radial = 48;
inline constexpr int default_disk_angular = 96;

struct QuadratureRule {
  enum class Kind { laguerre, jacobi_unit };
  Kind kind;
  double a = 0.0;  // alpha for laguerre, beta for jacobi_unit
  double b = 0.0;  // unused for laguerre, eta for jacobi_unit
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes are the eigenvalues of diag(2k+alpha+1) with off-diagonal
// sqrt(k(k+alpha)); weights are Gamma(alpha+1) times squared first
// eigenvector components.  Total mass Gamma(alpha+1).
inline QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n <= 0) throw std::invalid_argument("gauss_laguerre: need n >= 1");
  if (!(alpha > -1.0)) {
    throw std::domain_error("gauss_laguerre: alpha must be > -1");
  }
  std::vector<double> d(static_cast<std::size_t>(n));
  std::vector<double> e(n > 1 ? static_cast<std::size_t>(n - 1) : 0);
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;
  for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
  for (int k = 0; k + 1 < n; ++k) e[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
  tridiag_eigen(d, e, z);

  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::laguerre;
  rule.a = alpha;
  rule.nodes = std::move(d);
  rule.weights.resize(static_cast<std::size_t>(n));
  const double mu0 = gamma_fn(alpha + 1.0);
  for (int k = 0; k < n; ++k) rule.weights[k] = mu0 * z[k] * z[k];
  return rule;
}

// Rule for t^{beta-1} (1-t)^{eta-1} dt on (0,1): the Jacobi rule with
// exponents (a, b) = (eta-1, beta-1) on [-1,1], mapped by t = (1+x)/2.
// Total mass B(beta, eta).
inline QuadratureRule gauss_jacobi_unit(int n, double beta, double eta) {
  if (n <= 0) throw std::invalid_argument("gauss_jacobi_unit: need n >= 1");
  if (!(beta > 0.0) || !(eta > 0.0)) {
    throw std::domain_error("gauss_jacobi_unit: beta and eta must be > 0");
  }
  const double a = eta - 1.0;
  const double b = beta - 1.0;
  std::vector<double> d(static_cast<std::size_t>(n));
  std::vector<double> e(n > 1 ? static_cast<std::size_t>(n - 1) : 0);
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;

  d[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    d[k] = (b * b - a * a) / (s * (s + 2.0));
  }
  if (n > 1) {
    e[0] = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) /
                     ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0)));
  }
  for (int k = 2; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    e[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) /
                         (s * s * (s + 1.0) * (s - 1.0)));
  }
  tridiag_eigen(d, e, z);

  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::jacobi_unit;
  rule.a = beta;
  rule.b = eta;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // mu0 on [-1,1] is 2^{a+b+1} B(a+1, b+1); the map to (0,1) scales the
  // weights by 2^{-(a+b+1)}, so the B factor is all that survives.
  const double mass =
      std::exp(ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(a + b + 2.0));
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = 0.5 * (1.0 + d[k]);
    rule.weights[k] = mass * z[k] * z[k];
  }
  return rule;
}

template <typename F>
auto integrate(const QuadratureRule& rule, F&& f)
    -> decltype(f(rule.nodes[0]) * rule.weights[0]) {
  using R = decltype(f(rule.nodes[0]) * rule.weights[0]);
  R acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += f(rule.nodes[i]) * rule.weights[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Product rule on the unit disk of a slice: radial Gauss rule in t = |p|^2
// for t^{beta-1}(1-t)^{eta-1} dt, uniform angles, weight pi w_j / Ntheta per
// node sqrt(t_j) e^{i theta_l}.  Integrates conj(p)^m p^n against the slice
// measure exactly (giving pi gamma_n delta_mn) for m+n <= 2 Nr - 2 and
// |m - n| < Ntheta.

struct DiskRule {
  int nr = 0;
  int ntheta = 0;
  double beta = 0.0;
  double eta = 0.0;
  std::vector<double> t;         // radial nodes in t = |p|^2
  std::vector<double> w_radial;  // radial weights (mass B(beta,eta))

  double node_weight(int j) const {
    const double pi = 3.14159265358979323846;
    return pi * w_radial[static_cast<std::size_t>(j)] / ntheta;
  }

  std::complex<double> node(int j, int l) const {
    const double two_pi = 6.28318530717958647693;
    const double theta = two_pi * l / ntheta;
    const double r = std::sqrt(t[static_cast<std::size_t>(j)]);
    return std::polar(r, theta);
  }
};

inline DiskRule disk_rule(int nr, int ntheta, double beta, double eta) {
  if (nr <= 0 || ntheta <= 0) {
    throw std::invalid_argument("disk_rule: need nr, ntheta >= 1");
  }
  const QuadratureRule radial = gauss_jacobi_unit(nr, beta, eta);
  DiskRule rule;
  rule.nr = nr;
  rule.ntheta = ntheta;
  rule.beta = beta;
  rule.eta = eta;
  rule.t = radial.nodes;
  rule.w_radial = radial.weights;
  return rule;
}

// f receives the slice coordinate p as complex; result type follows f.
template <typename F>
auto integrate(const DiskRule& rule, F&& f)
    -> decltype(f(std::complex<double>{}) * 1.0) {
  using R = decltype(f(std::complex<double>{}) * 1.0);
  R acc{};
  for (int j = 0; j < rule.nr; ++j) {
    const double wj = rule.node_weight(j);
    for (int l = 0; l < rule.ntheta; ++l) {
      acc += f(rule.node(j, l)) * wj;
    }
  }
  return acc;
}

}  // namespace fhankel
