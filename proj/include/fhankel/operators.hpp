#pragma once

// The dual fractional Hankel transform S_y and its companions, in both of
// the forms the library keeps in parallel:
//
//   * spectral form: on coefficients, using the eigenrelation
//     S_y(phi_n a_n) = q^n (phi_n(y) a_n) -- exact up to rounding;
//   * quadrature form: on function values, integrating the closed kernel
//     against a half-line Gauss rule (and the disk rule for the adjoint).
//
// The two routes are deliberately independent so that each can serve as an
// oracle for the other in the tests.  Conventions: coefficients multiply
// basis elements from the right, inner products <g, f> are conjugate-linear
// in g and right-linear in f.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fhankel/kernels.hpp"
#include "fhankel/matrix.hpp"
#include "fhankel/quadrature.hpp"
#include "fhankel/quaternion.hpp"
#include "fhankel/special.hpp"

namespace fhankel {

inline constexpr int default_truncation = 40;

// f = sum_n phi_n^(alpha) a_n with quaternion right coefficients a_n.
struct LaguerreCoeffs {
  double alpha = 0.0;
  std::vector<Quaternion> a;
};

// F(q) = sum_n q^n c_n with quaternion right coefficients c_n.
struct MonomialCoeffs {
  std::vector<Quaternion> c;
};

// ---------------------------------------------------------------------------
// Norms from coefficients.

// ||f||^2 for the half-line weight: the phi_n are orthonormal, so this is
// just the coefficient energy.
inline double coeff_norm_sq(const LaguerreCoeffs& f) {
  double s = 0.0;
  for (const Quaternion& an : f.a) s += norm_sq(an);
  return s;
}

// ||F||^2 for the ball measure: the monomials are orthogonal with
// ||e_n||^2 = pi gamma_n.
inline double monomial_norm_sq(const MonomialCoeffs& F, double beta,
                               double eta) {
  const double pi = 3.14159265358979323846;
  if (F.c.empty()) return 0.0;
  const std::vector<double> g =
      gamma_moment_all(static_cast<int>(F.c.size()) - 1, beta, eta);
  double s = 0.0;
  for (std::size_t n = 0; n < F.c.size(); ++n) s += g[n] * norm_sq(F.c[n]);
  return pi * s;
}

// ---------------------------------------------------------------------------
// Pointwise evaluation of expansions.

inline Quaternion eval_laguerre_expansion(const LaguerreCoeffs& f, double x) {
  if (f.a.empty()) return Quaternion{};
  const std::vector<double> p =
      phi_all(static_cast<int>(f.a.size()) - 1, f.alpha, x);
  Quaternion acc{};
  for (std::size_t n = 0; n < f.a.size(); ++n) acc += p[n] * f.a[n];
  return acc;
}

inline Quaternion eval_monomial_expansion(const MonomialCoeffs& F,
                                          const Quaternion& q) {
  return eval_power_series(F.c, q);
}

// ---------------------------------------------------------------------------
// The transform and its adjoint.

// Spectral form: c_n = phi_n^(alpha)(y) a_n.
inline MonomialCoeffs dual_transform_spectral(const LaguerreCoeffs& f,
                                              double y) {
  MonomialCoeffs out;
  if (f.a.empty()) return out;
  const std::vector<double> p =
      phi_all(static_cast<int>(f.a.size()) - 1, f.alpha, y);
  out.c.resize(f.a.size());
  for (std::size_t n = 0; n < f.a.size(); ++n) out.c[n] = p[n] * f.a[n];
  return out;
}

// Quadrature form: (S f)(q) = sum_i w_i R_q(x_i, y) f(x_i) for a half-line
// rule with the same alpha as the kernel.
inline Quaternion dual_transform_quadrature(
    const std::function<Quaternion(double)>& f, double y, double alpha,
    const QuadratureRule& rule, const Quaternion& q) {
  if (rule.kind != QuadratureRule::Kind::laguerre) {
    throw std::invalid_argument(
        "dual_transform_quadrature: needs a half-line rule");
  }
  const SlicePoint s = slice_decompose(q);
  const std::complex<double> z = s.complex_value();
  Quaternion acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const std::complex<double> r =
        hankel_kernel_closed(z, rule.nodes[i], y, alpha);
    acc += (embed(s.axis, r) * f(rule.nodes[i])) * rule.weights[i];
  }
  return acc;
}

// Adjoint, spectral form: b_n = pi gamma_n phi_n^(alpha)(y) g_n.
inline LaguerreCoeffs adjoint_apply_spectral(const MonomialCoeffs& G, double y,
                                             const Params& params) {
  const double pi = 3.14159265358979323846;
  LaguerreCoeffs out;
  out.alpha = params.alpha;
  if (G.c.empty()) return out;
  const int nmax = static_cast<int>(G.c.size()) - 1;
  const std::vector<double> p = phi_all(nmax, params.alpha, y);
  const std::vector<double> g = gamma_moment_all(nmax, params.beta, params.eta);
  out.a.resize(G.c.size());
  for (std::size_t n = 0; n < G.c.size(); ++n) {
    out.a[n] = (pi * g[n] * p[n]) * G.c[n];
  }
  return out;
}

// Adjoint, quadrature form: (S* G)(x) = integral over the disk of
// R_{conj p}(x, y) G(p) against the ball measure, by the disk product rule.
inline Quaternion adjoint_apply_quadrature(
    const std::function<Quaternion(Quaternion)>& G, double x, double y,
    const Params& params, const DiskRule& rule) {
  Quaternion acc{};
  for (int j = 0; j < rule.nr; ++j) {
    const double wj = rule.node_weight(j);
    for (int l = 0; l < rule.ntheta; ++l) {
      const std::complex<double> p = rule.node(j, l);
      const std::complex<double> r =
          hankel_kernel_closed(std::conj(p), x, y, params.alpha);
      const Quaternion pq = embed(quat_i, p);
      acc += (embed(quat_i, r) * G(pq)) * wj;
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Fractional semigroup on coefficients: a_n -> t^n a_n.

inline LaguerreCoeffs hankel_fractional_apply(const LaguerreCoeffs& f,
                                              const Quaternion& t) {
  LaguerreCoeffs out;
  out.alpha = f.alpha;
  out.a.resize(f.a.size());
  Quaternion tn{1.0};
  for (std::size_t n = 0; n < f.a.size(); ++n) {
    out.a[n] = tn * f.a[n];
    tn = tn * t;
  }
  return out;
}

// Semigroup composition parameter: valid only when both factors live on a
// common slice (otherwise t^n u^n is not (t u)^n and the one-parameter law
// breaks down).
inline Quaternion hankel_compose(const Quaternion& t, const Quaternion& u) {
  if (!same_slice(t, u)) {
    throw std::invalid_argument(
        "hankel_compose: semigroup parameters must lie on one slice");
  }
  return t * u;
}

// ---------------------------------------------------------------------------
// Bargmann-type companion transform:
// (B f)(q) = (1-q)^{-(alpha+1)} integral t^alpha e^{-t/(1-q)} f(t) dt,
// evaluated against a half-line rule for the weight t^alpha e^{-t}; the
// leftover exponential e^{t(1 - 1/(1-q))} has real exponent <= t/2 on
// |q| < 1, so the node products stay finite.
inline Quaternion bargmann_apply(const std::function<Quaternion(double)>& f,
                                 const Quaternion& q, double alpha,
                                 const QuadratureRule& rule) {
  if (rule.kind != QuadratureRule::Kind::laguerre) {
    throw std::invalid_argument("bargmann_apply: needs a half-line rule");
  }
  const SlicePoint s = slice_decompose(q);
  const std::complex<double> z = s.complex_value();
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("bargmann_apply: requires |q| < 1");
  }
  const std::complex<double> d = 1.0 - z;
  const std::complex<double> expo = 1.0 - 1.0 / d;  // Re <= 1/2
  const std::complex<double> pref = std::exp(-(alpha + 1.0) * std::log(d));
  Quaternion acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const std::complex<double> e = std::exp(expo * rule.nodes[i]);
    acc += (embed(s.axis, e) * f(rule.nodes[i])) * rule.weights[i];
  }
  return embed(s.axis, pref) * acc;
}

// ---------------------------------------------------------------------------
// Slice Cauchy-Riemann operator: (d-bar f)(q) = (1/2)(d_u + I d_v) f at
// q = u + I v, by central differences.  Vanishes (to O(h^2)) exactly on
// slice-regular functions; equals 1 on f(q) = conj(q).
inline Quaternion slice_derivative(const std::function<Quaternion(Quaternion)>& f,
                                   const Quaternion& q, double h = 1e-5) {
  const SlicePoint s = slice_decompose(q);
  const Quaternion axis = s.axis;
  const Quaternion du =
      (f(q + Quaternion{h}) - f(q - Quaternion{h})) * (0.5 / h);
  const Quaternion dv = (f(q + axis * h) - f(q - axis * h)) * (0.5 / h);
  return 0.5 * (du + axis * dv);
}

// ---------------------------------------------------------------------------
// Matrix of the transform against (phi_n) -> (e_m / ||e_m||) bases.

enum class OperatorForm { closed, discretized };

struct DiscretizationOptions {
  int halfline_nodes = default_halfline_nodes;
  double circle_radius = 0.8;  // monomial extraction circle
  int circle_angles = 512;
};

// Closed form: the transform is diagonal with entries
// sqrt(pi gamma_n) phi_n^(alpha)(y).  Discretized form: columns are images
// of phi_n under the quadrature transform, sampled on a circle |p| = r and
// resolved into monomial coefficients by an angular DFT (r^m division is
// safe at r = 0.8 for the sizes used here); rows are then scaled by the
// monomial norms sqrt(pi gamma_m).
inline Matrix build_operator_matrix(double y, const Params& params, int n,
                                    OperatorForm form,
                                    const DiscretizationOptions& opts = {}) {
  if (n <= 0) throw std::invalid_argument("build_operator_matrix: need n >= 1");
  const double pi = 3.14159265358979323846;
  const std::vector<double> gam = gamma_moment_all(n - 1, params.beta, params.eta);

  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  if (form == OperatorForm::closed) {
    const std::vector<double> p = phi_all(n - 1, params.alpha, y);
    for (int k = 0; k < n; ++k) {
      m.at(k, k) = std::sqrt(pi * gam[static_cast<std::size_t>(k)]) *
                   p[static_cast<std::size_t>(k)];
    }
    return m;
  }

  const QuadratureRule rule = gauss_laguerre(opts.halfline_nodes, params.alpha);
  const int nt = opts.circle_angles;
  const double r = opts.circle_radius;
  const std::size_t nodes = rule.nodes.size();

  // phi table: pt[i][k] = w_i phi_k(x_i).
  std::vector<std::vector<double>> pt(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    pt[i] = phi_all(n - 1, params.alpha, rule.nodes[i]);
    for (double& v : pt[i]) v *= rule.weights[i];
  }

  // Kernel values on the extraction circle; independent of the column, so
  // evaluated once: kc[l][i] = R_{z_l}(x_i, y).
  const double two_pi = 6.28318530717958647693;
  std::vector<std::vector<std::complex<double>>> kc(static_cast<std::size_t>(nt));
  for (int l = 0; l < nt; ++l) {
    const std::complex<double> z = std::polar(r, two_pi * l / nt);
    auto& row = kc[static_cast<std::size_t>(l)];
    row.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
      row[i] = hankel_kernel_closed(z, rule.nodes[i], y, params.alpha);
    }
  }

  std::vector<std::complex<double>> images(static_cast<std::size_t>(nt));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < nt; ++l) {
      std::complex<double> acc = 0.0;
      const auto& row = kc[static_cast<std::size_t>(l)];
      for (std::size_t i = 0; i < nodes; ++i) {
        acc += row[i] * pt[i][static_cast<std::size_t>(k)];
      }
      images[static_cast<std::size_t>(l)] = acc;
    }
    // Angular DFT: c_mk = (1/(nt r^m)) sum_l images_l e^{-i m theta_l}.
    double rm = 1.0;
    for (int mrow = 0; mrow < n; ++mrow) {
      std::complex<double> c = 0.0;
      for (int l = 0; l < nt; ++l) {
        c += images[static_cast<std::size_t>(l)] *
             std::polar(1.0, -two_pi * mrow * l / nt);
      }
      c /= static_cast<double>(nt) * rm;
      m.at(static_cast<std::size_t>(mrow), static_cast<std::size_t>(k)) =
          std::sqrt(pi * gam[static_cast<std::size_t>(mrow)]) * c;
      rm *= r;
    }
  }
  return m;
}

// Recover monomial coefficients of an image function on a slice from values
// on the circle |p| = radius: the same angular DFT used by the matrix
// builder, exposed for pipelines that need image coefficients directly.
inline MonomialCoeffs extract_monomial_coeffs(
    const std::function<Quaternion(Quaternion)>& F, int degree, double radius,
    int angles) {
  const double two_pi = 6.28318530717958647693;
  std::vector<Quaternion> vals(static_cast<std::size_t>(angles));
  for (int l = 0; l < angles; ++l) {
    const std::complex<double> z = std::polar(radius, two_pi * l / angles);
    vals[static_cast<std::size_t>(l)] = F(embed(quat_i, z));
  }
  MonomialCoeffs out;
  out.c.resize(static_cast<std::size_t>(degree) + 1);
  double rm = 1.0;
  for (int mrow = 0; mrow <= degree; ++mrow) {
    Quaternion acc{};
    for (int l = 0; l < angles; ++l) {
      // Left-multiply by e^{-i m theta}: it then cancels the left-sitting
      // power p^m directly.  A right-hand phase would pick up a conjugation
      // when moved past the j/k parts of the coefficients and corrupt them.
      const std::complex<double> ph = std::polar(1.0, -two_pi * mrow * l / angles);
      acc += embed(quat_i, ph) * vals[static_cast<std::size_t>(l)];
    }
    out.c[static_cast<std::size_t>(mrow)] = acc / (angles * rm);
    rm *= radius;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Null space of S_y on basis indices: N_y = { n : L_n^(alpha)(y) = 0 }, with
// the zero test made relative to neighbouring values of the recurrence so
// that a polished root of L_n registers while small-but-genuine values do
// not.

inline std::vector<int> null_space_indices(double y, double alpha, int nmax,
                                           double tol = 1e-9) {
  if (nmax < 0) throw std::invalid_argument("null_space_indices: nmax < 0");
  const std::vector<double> L = laguerre_all(nmax + 1, alpha, y);
  std::vector<int> out;
  for (int n = 0; n <= nmax; ++n) {
    double scale = 1.0;
    if (n >= 1) scale = std::max(scale, std::fabs(L[static_cast<std::size_t>(n - 1)]));
    scale = std::max(scale, std::fabs(L[static_cast<std::size_t>(n + 1)]));
    if (std::fabs(L[static_cast<std::size_t>(n)]) <= tol * scale) out.push_back(n);
  }
  return out;
}

struct RangeBasisReport {
  std::vector<int> surviving;     // n with phi_n(y) != 0: e_n in the range
  std::vector<int> null_indices;  // N_y
  bool strict_inclusion = false;  // range misses some e_n
};

inline RangeBasisReport range_basis_report(double y, double alpha, int nmax,
                                           double tol = 1e-9) {
  RangeBasisReport rep;
  rep.null_indices = null_space_indices(y, alpha, nmax, tol);
  std::size_t k = 0;
  for (int n = 0; n <= nmax; ++n) {
    if (k < rep.null_indices.size() && rep.null_indices[k] == n) {
      ++k;
      continue;
    }
    rep.surviving.push_back(n);
  }
  rep.strict_inclusion = !rep.null_indices.empty();
  return rep;
}

}  // namespace fhankel
