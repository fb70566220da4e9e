#pragma once

// The two reproducing kernels of the theory.
//
// Half-line side: for |q| < 1 the rank-one-sum kernel
//
//   R_q(x, y) = sum_n q^n phi_n(x) phi_n(y)
//             = (1-q)^{-(alpha+1)} exp(-q(x+y)/(1-q)) g_alpha(q x y / (1-q)^2)
//
// (the product-formula resummation of the series).  The closed form is
// evaluated on the slice of q with complex arithmetic; for large Bessel
// argument the exponential of the prefactor and the exponentials inside
// g_alpha are merged before exponentiating, because the individual factors
// overflow long before their product does when q approaches the unit circle.
// Since Re(1/(1-q)) >= 1/2 on |q| < 1, the merged exponents stay moderate
// and the evaluation needs no branch decisions beyond the series/asymptotic
// switch inherited from g_alpha.
//
// Ball side: the slice-regular reproducing kernel of the weighted monomial
// space, the ordered ("star") hypergeometric series
//
//   K_{beta,eta}(p, q) = Gamma(beta+eta) / (pi Gamma(eta) Gamma(beta))
//                        * sum_k ((1)_k (eta+beta)_k / (beta)_k) p^k conj(q)^k / k!
//
// with the ordered power pairs p^k conj(q)^k kept as written: p and q need
// not commute, and replacing the pair by (p conj(q))^k changes the value.
// On the slice beta = 1 the series collapses to the closed form
// (eta/pi) (1 - z conj(w))^{-(eta+1)}.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fhankel/quaternion.hpp"
#include "fhankel/special.hpp"

namespace fhankel {

inline constexpr int default_hankel_series_terms = 80;
inline constexpr int default_star_series_terms = 400;
inline constexpr double default_series_tolerance = 1e-16;

// Request bundle used by the CLI when driving kernel evaluations.
struct KernelEvalRequest {
  Params params;
  int truncation = default_star_series_terms;
  double tolerance = default_series_tolerance;
};

// ---------------------------------------------------------------------------
// Half-line kernel, closed form.  Slice-complex core; |z| < 1 required.

inline std::complex<double> hankel_kernel_closed(std::complex<double> z,
                                                 double x, double y,
                                                 double alpha) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("hankel_kernel_closed: requires |q| < 1");
  }
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw std::domain_error("hankel_kernel_closed: requires x, y >= 0");
  }
  const std::complex<double> d = 1.0 - z;
  const std::complex<double> a = -z * (x + y) / d;
  const std::complex<double> w = z * (x * y) / (d * d);
  // Re(d) > 0, so the principal power is smooth over the whole disk.
  const std::complex<double> pref =
      std::exp(-(alpha + 1.0) * std::log(d));
  if (std::abs(w) <= 100.0) {
    return pref * std::exp(a) * bessel_i_scaled(alpha, w);
  }
  // Merge the kernel exponent with the two exponentials of the asymptotic
  // expansion of g_alpha: exp(a) e^{+-xi} -> exp(a +- xi).
  const detail::GAsymParts p = detail::g_asym_parts(alpha, w);
  return pref * p.pref *
         (std::exp(a + p.xi) * p.s1 + p.phase * std::exp(a - p.xi) * p.s2);
}

inline Quaternion hankel_kernel_closed(const Quaternion& q, double x, double y,
                                       double alpha) {
  const SlicePoint s = slice_decompose(q);
  return embed(s.axis, hankel_kernel_closed(s.complex_value(), x, y, alpha));
}

// Half-line kernel, truncated series sum_{n<N} q^n phi_n(x) phi_n(y).
inline Quaternion hankel_kernel_series(const Quaternion& q, double x, double y,
                                       double alpha,
                                       int terms = default_hankel_series_terms) {
  if (terms <= 0) return Quaternion{};
  const std::vector<double> px = phi_all(terms - 1, alpha, x);
  const std::vector<double> py = phi_all(terms - 1, alpha, y);
  std::vector<double> coeffs(static_cast<std::size_t>(terms));
  for (int n = 0; n < terms; ++n) {
    coeffs[static_cast<std::size_t>(n)] =
        px[static_cast<std::size_t>(n)] * py[static_cast<std::size_t>(n)];
  }
  return eval_power_series(coeffs, q);
}

// ---------------------------------------------------------------------------
// Ordered hypergeometric series 2F1*(a, b; c | p, q)
//   = sum_k ((a)_k (b)_k / (c)_k) p^k q^k / k!
// with quaternion arguments and ordered power pairs.

inline Quaternion hyper2f1_star(double a, double b, double c,
                                const Quaternion& p, const Quaternion& q,
                                int terms = default_star_series_terms,
                                double tol = default_series_tolerance) {
  if (!(c > 0.0)) {
    throw std::domain_error("hyper2f1_star: requires c > 0");
  }
  if (!(abs(p) * abs(q) < 1.0)) {
    throw std::domain_error("hyper2f1_star: requires |p| |q| < 1");
  }
  Quaternion sum{1.0};
  Quaternion pk{1.0};
  Quaternion qk{1.0};
  double coeff = 1.0;
  for (int k = 1; k < terms; ++k) {
    coeff *= (a + k - 1.0) * (b + k - 1.0) / ((c + k - 1.0) * k);
    pk = pk * p;
    qk = qk * q;
    const Quaternion term = (pk * qk) * coeff;
    sum += term;
    if (k > 4 && abs(term) <= tol * abs(sum)) break;
  }
  return sum;
}

// Ball kernel as the ordered series: K(p, q) = c0 * 2F1*(1, eta+beta; beta |
// p, conj(q)), c0 = Gamma(beta+eta) / (pi Gamma(eta) Gamma(beta)).
inline Quaternion bergman_kernel_series(const Quaternion& p, const Quaternion& q,
                                        double beta, double eta,
                                        int terms = default_star_series_terms,
                                        double tol = default_series_tolerance) {
  if (!(beta > 0.0) || !(eta > 0.0)) {
    throw std::domain_error("bergman_kernel_series: beta, eta must be > 0");
  }
  const double pi = 3.14159265358979323846;
  const double c0 =
      std::exp(ln_gamma(beta + eta) - ln_gamma(eta) - ln_gamma(beta)) / pi;
  return hyper2f1_star(1.0, eta + beta, beta, p, conj(q), terms, tol) * c0;
}

// Slice restriction of the beta = 1 kernel in closed form.
inline std::complex<double> bergman_kernel_closed_slice(std::complex<double> z,
                                                        std::complex<double> w,
                                                        double eta) {
  if (!(eta > 0.0)) {
    throw std::domain_error("bergman_kernel_closed_slice: eta must be > 0");
  }
  const std::complex<double> d = 1.0 - z * std::conj(w);
  const double pi = 3.14159265358979323846;
  return (eta / pi) * std::exp(-(eta + 1.0) * std::log(d));
}

}  // namespace fhankel
