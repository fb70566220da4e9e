#pragma once

// Scalar special functions underlying the transform library:
//
//   * ln_gamma / pochhammer,
//   * the generalized Laguerre polynomials L_n^(alpha) and their
//     orthonormal companions phi_n (unit vectors for the weight
//     x^alpha e^{-x} on the half line),
//   * the weight moments gamma_n = Gamma(eta) Gamma(beta+n) / Gamma(beta+eta+n)
//     that give the monomial norms on the weighted Bergman side,
//   * the entire Bessel-type series g_alpha(w) = sum_n w^n / (n! Gamma(alpha+n+1)),
//     which for w = v^2/4 is v^{-alpha} I_alpha(v); this is the analytic heart
//     of the closed kernel form and needs uniform accuracy for complex w.
//
// g_alpha is evaluated by a forward power series in extended precision while
// |2 sqrt(w)| <= 20 and by the two-exponential Poincare asymptotic expansion
// beyond.  The series region is cancellation-limited in double (terms reach
// e^{|xi|} ~ e^20 before collapsing), which is why it runs in long double;
// the asymptotic branch keeps both exponentials e^{+xi} and e^{-xi} because
// near the negative real axis they are comparable in size and the recessive
// one carries the imaginary part.  Callers that need g inside a product with
// other exponentials (the closed kernel at strongly clustered quadrature
// nodes) can fetch the asymptotic pieces separately and merge exponents.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhankel/tridiag.hpp"

namespace fhankel {

// ---------------------------------------------------------------------------
// Parameter pack shared across the library.  Domain rules are enforced here
// once so that every downstream routine can assume a valid configuration.
struct Params {
  double alpha;  // half-line weight exponent, > -1
  double beta;   // radial moment offset, > 0
  double eta;    // radial weight exponent, > 0
  double y;      // transform base point, >= 0

  Params(double alpha_, double beta_, double eta_, double y_)
      : alpha(alpha_), beta(beta_), eta(eta_), y(y_) {
    if (!(alpha > -1.0)) {
      throw std::domain_error("Params: alpha must be > -1, got " +
                              std::to_string(alpha_));
    }
    if (!(beta > 0.0)) {
      throw std::domain_error("Params: beta must be > 0, got " +
                              std::to_string(beta_));
    }
    if (!(eta > 0.0)) {
      throw std::domain_error("Params: eta must be > 0, got " +
                              std::to_string(eta_));
    }
    if (!(y >= 0.0)) {
      throw std::domain_error("Params: y must be >= 0, got " +
                              std::to_string(y_));
    }
  }
};

// ---------------------------------------------------------------------------
// ln Gamma, Lanczos (g = 7, 9 terms) in log form with reflection below 1/2.
// Relative accuracy ~1e-15 across (0, 1e4]; validated against the C library
// implementation in the tests.

namespace detail {

inline double lanczos_sum(double x) {
  // x >= 0.5 assumed; series argument is x - 1.
  static const double c[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  double s = c[0];
  for (int k = 1; k < 9; ++k) s += c[k] / (x - 1.0 + k);
  return s;
}

}  // namespace detail

inline double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("ln_gamma: argument must be positive, got " +
                            std::to_string(x));
  }
  if (x < 0.5) {
    // Reflection: ln Gamma(x) = ln(pi / sin(pi x)) - ln Gamma(1 - x).
    const double pi = 3.14159265358979323846;
    return std::log(pi / std::sin(pi * x)) - ln_gamma(1.0 - x);
  }
  const double g = 7.0;
  const double t = x + g - 0.5;
  const double half_log_2pi = 0.91893853320467274178;
  return half_log_2pi + (x - 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(x));
}

inline double gamma_fn(double x) { return std::exp(ln_gamma(x)); }

// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
inline double pochhammer(double a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative order");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

// ---------------------------------------------------------------------------
// Weight moments gamma_n = Gamma(eta) Gamma(beta+n) / Gamma(beta+eta+n).
// Evaluated by the exact ratio recurrence gamma_{n+1} = gamma_n (beta+n) /
// (beta+eta+n) from gamma_0 = B(beta, eta), so that consecutive values are
// consistent to machine precision (the direct three-lgamma form loses a few
// digits to cancellation once n is large).

inline std::vector<double> gamma_moment_all(int nmax, double beta, double eta) {
  if (nmax < 0) throw std::invalid_argument("gamma_moment_all: negative order");
  std::vector<double> g(static_cast<std::size_t>(nmax) + 1);
  g[0] = std::exp(ln_gamma(beta) + ln_gamma(eta) - ln_gamma(beta + eta));
  for (int n = 0; n < nmax; ++n) {
    g[n + 1] = g[n] * ((beta + n) / (beta + eta + n));
  }
  return g;
}

inline double gamma_moment(int n, double beta, double eta) {
  return gamma_moment_all(n, beta, eta).back();
}

// ---------------------------------------------------------------------------
// Generalized Laguerre polynomials, plain and orthonormalized.

// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}.
inline std::vector<double> laguerre_all(int nmax, double alpha, double x) {
  if (nmax < 0) throw std::invalid_argument("laguerre_all: negative degree");
  std::vector<double> L(static_cast<std::size_t>(nmax) + 1);
  L[0] = 1.0;
  if (nmax >= 1) L[1] = 1.0 + alpha - x;
  for (int n = 1; n < nmax; ++n) {
    L[n + 1] = ((2.0 * n + 1.0 + alpha - x) * L[n] - (n + alpha) * L[n - 1]) /
               (n + 1.0);
  }
  return L;
}

inline double laguerre(int n, double alpha, double x) {
  return laguerre_all(n, alpha, x).back();
}

// phi_n(x) = sqrt(n! / Gamma(alpha+n+1)) L_n^(alpha)(x); orthonormal for the
// weight x^alpha e^{-x} dx on (0, inf).  The normalized recurrence
//   phi_{n+1} = (2n+alpha+1-x)/sqrt((n+1)(n+alpha+1)) phi_n
//               - sqrt(n(n+alpha)/((n+1)(n+alpha+1))) phi_{n-1}
// keeps every intermediate O(1), so it is stable out to very large degree.
inline std::vector<double> phi_all(int nmax, double alpha, double x) {
  if (nmax < 0) throw std::invalid_argument("phi_all: negative degree");
  std::vector<double> p(static_cast<std::size_t>(nmax) + 1);
  p[0] = std::exp(-0.5 * ln_gamma(alpha + 1.0));
  if (nmax >= 1) p[1] = (alpha + 1.0 - x) * std::exp(-0.5 * ln_gamma(alpha + 2.0));
  for (int n = 1; n < nmax; ++n) {
    const double a = (2.0 * n + alpha + 1.0 - x) /
                     std::sqrt((n + 1.0) * (n + alpha + 1.0));
    const double b =
        std::sqrt(n * (n + alpha) / ((n + 1.0) * (n + alpha + 1.0)));
    p[n + 1] = a * p[n] - b * p[n - 1];
  }
  return p;
}

inline double phi_n(int n, double alpha, double x) {
  return phi_all(n, alpha, x).back();
}

// Large-degree oscillatory approximation for fixed y > 0:
//   L_n^(alpha)(y) ~ e^{y/2} pi^{-1/2} y^{-(2a+1)/4} n^{(2a-1)/4}
//                    cos(2 sqrt(n y) - pi (2a+1)/4).
// The envelope (the same expression without the cosine) is exposed separately
// because near cosine zeros the pointwise relative error of the full formula
// is unbounded while the envelope-relative error stays O(n^{-1/2}).
inline double laguerre_asymptotic_envelope(int n, double alpha, double y) {
  if (!(y > 0.0)) {
    throw std::domain_error("laguerre_asymptotic: requires y > 0");
  }
  const double pi = 3.14159265358979323846;
  return std::exp(0.5 * y) / std::sqrt(pi) *
         std::pow(y, -(2.0 * alpha + 1.0) / 4.0) *
         std::pow(static_cast<double>(n), (2.0 * alpha - 1.0) / 4.0);
}

inline double laguerre_asymptotic(int n, double alpha, double y) {
  const double pi = 3.14159265358979323846;
  const double phase =
      2.0 * std::sqrt(static_cast<double>(n) * y) - pi * (2.0 * alpha + 1.0) / 4.0;
  return laguerre_asymptotic_envelope(n, alpha, y) * std::cos(phase);
}

// ---------------------------------------------------------------------------
// g_alpha(w) = sum_{n>=0} w^n / (n! Gamma(alpha+n+1)), entire in w.

namespace detail {

// Forward series in extended precision.  Safe (monotone tail ratio) whenever
// it is called: real w in [0, 1e4], complex w with |w| <= 100.
inline std::complex<long double> g_series(double alpha,
                                          std::complex<long double> w,
                                          int max_terms) {
  std::complex<long double> term =
      std::exp(static_cast<long double>(-ln_gamma(alpha + 1.0)));
  std::complex<long double> sum = term;
  for (int n = 1; n <= max_terms; ++n) {
    term *= w / (static_cast<long double>(n) * (static_cast<long double>(alpha) + n));
    sum += term;
    if (n > 4 && std::abs(term) <= 1e-18L * std::abs(sum)) break;
  }
  return sum;
}

// Poincare expansion pieces: with xi = 2 sqrt(w) (principal branch, so
// Re xi >= 0),
//   g_alpha(w) ~ pref * ( e^{xi} S1 + phase * e^{-xi} S2 ),
//   pref  = s^{-alpha} / sqrt(2 pi xi),        s = sqrt(w),
//   S1    = sum_k (-1)^k a_k xi^{-k},  S2 = sum_k a_k xi^{-k},
//   a_0   = 1,  a_k = a_{k-1} (4 alpha^2 - (2k-1)^2) / (8k),
//   phase = exp(sgn * i pi (alpha + 1/2)),
// where sgn = +1 for Im w >= +0 and -1 for Im w <= -0 (the sign of the
// recessive exponential's phase factor flips across the branch cut on the
// negative real axis; signed zero selects the correct side for conjugate
// symmetry).  Truncated at 30 terms, which is well past the optimal index
// for |xi| > 20 and gives ~1e-12 relative accuracy at the switchover.
struct GAsymParts {
  std::complex<double> s1;
  std::complex<double> s2;
  std::complex<double> xi;
  std::complex<double> pref;
  std::complex<double> phase;
};

inline GAsymParts g_asym_parts(double alpha, std::complex<double> w) {
  constexpr int K = 30;
  const std::complex<double> s = std::sqrt(w);
  const std::complex<double> xi = 2.0 * s;
  const std::complex<double> inv_xi = 1.0 / xi;

  double a = 1.0;
  std::complex<double> s1{1.0, 0.0};
  std::complex<double> s2{1.0, 0.0};
  std::complex<double> xik{1.0, 0.0};
  double sign = -1.0;
  for (int k = 1; k <= K; ++k) {
    a *= (4.0 * alpha * alpha - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
    xik *= inv_xi;
    s1 += sign * a * xik;
    s2 += a * xik;
    sign = -sign;
  }

  GAsymParts parts;
  parts.s1 = s1;
  parts.s2 = s2;
  parts.xi = xi;
  const double two_pi = 6.28318530717958647693;
  parts.pref = std::exp(-alpha * std::log(s)) / std::sqrt(two_pi * xi);
  const double pi = 3.14159265358979323846;
  const double sgn = std::signbit(w.imag()) ? -1.0 : 1.0;
  parts.phase = std::polar(1.0, sgn * pi * (alpha + 0.5));
  return parts;
}

}  // namespace detail

// Complex (slice-value) evaluation.
inline std::complex<double> bessel_i_scaled(double alpha,
                                            std::complex<double> w) {
  if (!(alpha > -1.0)) {
    throw std::domain_error("bessel_i_scaled: alpha must be > -1");
  }
  if (std::abs(w) <= 100.0) {  // |2 sqrt(w)| <= 20
    const std::complex<long double> s = detail::g_series(
        alpha, std::complex<long double>(w.real(), w.imag()), 400);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
  }
  const detail::GAsymParts p = detail::g_asym_parts(alpha, w);
  return p.pref * (std::exp(p.xi) * p.s1 + p.phase * std::exp(-p.xi) * p.s2);
}

// Real evaluation, w >= 0.  All terms positive: no cancellation, so the
// series is usable much further out; beyond w = 1e4 the dominant-exponential
// asymptotic is already at machine accuracy and the recessive term is below
// e^{-400}.
inline double bessel_i_scaled(double alpha, double w) {
  if (!(alpha > -1.0)) {
    throw std::domain_error("bessel_i_scaled: alpha must be > -1");
  }
  if (!(w >= 0.0)) {
    throw std::domain_error(
        "bessel_i_scaled: real overload requires w >= 0; use the complex "
        "overload for negative or slice arguments");
  }
  if (w <= 1e4) {
    return static_cast<double>(
        detail::g_series(alpha, std::complex<long double>(w, 0.0L), 1000).real());
  }
  const detail::GAsymParts p = detail::g_asym_parts(alpha, {w, 0.0});
  return (p.pref * std::exp(p.xi) * p.s1).real();
}

// e^{-2 sqrt(w)} g_alpha(w) for real w >= 0: the exponentially normalized
// diagonal that stays O(poly) for all w, used by norm integrals whose bare
// integrand would overflow.
inline double bessel_i_scaled_exp(double alpha, double w) {
  if (!(alpha > -1.0)) {
    throw std::domain_error("bessel_i_scaled_exp: alpha must be > -1");
  }
  if (!(w >= 0.0)) {
    throw std::domain_error("bessel_i_scaled_exp: requires w >= 0");
  }
  if (w <= 1e4) {
    const long double damp = std::exp(static_cast<long double>(-2.0 * std::sqrt(w)));
    return static_cast<double>(
        damp * detail::g_series(alpha, std::complex<long double>(w, 0.0L), 1000).real());
  }
  const detail::GAsymParts p = detail::g_asym_parts(alpha, {w, 0.0});
  return (p.pref * p.s1).real();
}

// ---------------------------------------------------------------------------
// Zeros of L_n^(alpha): eigenvalues of the symmetric Jacobi matrix
// (diag 2k+alpha+1, offdiag sqrt(k(k+alpha))), polished by one round of
// Newton using d/dx L_n^(alpha) = -L_{n-1}^(alpha+1).

inline std::vector<double> laguerre_zeros(int n, double alpha) {
  if (n <= 0) throw std::invalid_argument("laguerre_zeros: need n >= 1");
  if (!(alpha > -1.0)) {
    throw std::domain_error("laguerre_zeros: alpha must be > -1");
  }
  std::vector<double> d(static_cast<std::size_t>(n));
  std::vector<double> e(n > 1 ? static_cast<std::size_t>(n - 1) : 0);
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;
  for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
  for (int k = 0; k + 1 < n; ++k) e[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
  tridiag_eigen(d, e, z);

  for (double& root : d) {
    for (int it = 0; it < 4; ++it) {
      const double f = laguerre(n, alpha, root);
      const double fp = -laguerre(n - 1, alpha + 1.0, root);
      if (fp == 0.0) break;
      const double step = f / fp;
      root -= step;
      if (std::fabs(step) <= 1e-15 * std::fabs(root)) break;
    }
  }
  return d;
}

}  // namespace fhankel
