#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "fhankel/quadrature.hpp"
#include "fhankel/special.hpp"

using namespace fhankel;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("parameter domain validation", "[special][params]") {
  CHECK_NOTHROW(Params(-0.5, 1.0, 2.0, 0.0));
  const Params p(1.5, 2.0, 0.7, 3.2);
  CHECK(p.alpha == 1.5);
  CHECK(p.beta == 2.0);
  CHECK(p.eta == 0.7);
  CHECK(p.y == 3.2);
  CHECK_THROWS_AS(Params(-1.5, 1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(Params(-1.0, 1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(Params(0.0, 0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(Params(0.0, 1.0, -2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(Params(0.0, 1.0, 1.0, -0.1), std::domain_error);
}

TEST_CASE("log-gamma agrees with the C library", "[special][gamma]") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 2.5, 7.2, 15.8, 101.3, 0.017}) {
    const double want = std::lgamma(x);
    CHECK(std::fabs(ln_gamma(x) - want) <= 1e-13 * std::max(1.0, std::fabs(want)));
  }
  // Known points: Gamma(1) = Gamma(2) = 1, Gamma(1/2) = sqrt(pi).
  CHECK(std::fabs(ln_gamma(1.0)) < 1e-14);
  CHECK(std::fabs(ln_gamma(2.0)) < 1e-14);
  CHECK(std::fabs(ln_gamma(0.5) - 0.5 * std::log(pi)) < 1e-14);
  // Recurrence Gamma(x + 1) = x Gamma(x).
  for (double x : {0.2, 3.7}) {
    CHECK(std::fabs(ln_gamma(x + 1.0) - (ln_gamma(x) + std::log(x))) < 1e-13);
  }
  // The domain is the positive half line (every internal use has shifted
  // arguments like alpha + 1 > 0).
  CHECK_THROWS_AS(ln_gamma(-0.5), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
}

TEST_CASE("pochhammer rising factorial", "[special][gamma]") {
  CHECK(pochhammer(2.3, 0) == 1.0);
  CHECK(std::fabs(pochhammer(2.3, 4) - 2.3 * 3.3 * 4.3 * 5.3) < 1e-12);
  CHECK(std::fabs(pochhammer(1.0, 5) - 120.0) < 1e-12);
}

TEST_CASE("weight moments: recurrence vs direct log-gamma", "[special][moments]") {
  const double beta = 2.5, eta = 1.7;
  const std::vector<double> g = gamma_moment_all(9, beta, eta);
  for (int n = 0; n <= 9; ++n) {
    const double direct = std::exp(std::lgamma(eta) + std::lgamma(beta + n) -
                                   std::lgamma(beta + eta + n));
    CHECK(std::fabs(g[static_cast<std::size_t>(n)] - direct) <= 1e-14 * direct);
    CHECK(gamma_moment(n, beta, eta) == g[static_cast<std::size_t>(n)]);
  }
  // eta = 1 collapses to 1 / (beta + n).
  for (int n : {0, 3, 11}) {
    CHECK(std::fabs(gamma_moment(n, 1.8, 1.0) - 1.0 / (1.8 + n)) < 1e-14);
  }
  // beta = eta = 1 gives the unweighted disk moments 1 / (n + 1).
  CHECK(std::fabs(gamma_moment(7, 1.0, 1.0) - 0.125) < 1e-15);
}

TEST_CASE("Laguerre polynomials match closed low-degree forms", "[special][laguerre]") {
  const double a = 0.7, x = 1.9;
  const std::vector<double> l = laguerre_all(3, a, x);
  CHECK(l[0] == 1.0);
  CHECK(std::fabs(l[1] - (a + 1.0 - x)) < 1e-14);
  const double l2 = 0.5 * x * x - (a + 2.0) * x + 0.5 * (a + 1.0) * (a + 2.0);
  CHECK(std::fabs(l[2] - l2) < 1e-13);
  const double l3 = -x * x * x / 6.0 + 0.5 * (a + 3.0) * x * x -
                    0.5 * (a + 2.0) * (a + 3.0) * x +
                    (a + 1.0) * (a + 2.0) * (a + 3.0) / 6.0;
  CHECK(std::fabs(l[3] - l3) < 1e-13);
  CHECK(laguerre(3, a, x) == l[3]);
}

TEST_CASE("normalized Laguerre functions are orthonormal", "[special][laguerre]") {
  // <phi_m, phi_n> over x^alpha e^{-x} dx = delta_mn; a 60-node rule is exact
  // for these degree <= 16 integrands.
  const double alpha = 0.7;
  const QuadratureRule rule = gauss_laguerre(60, alpha);
  std::vector<std::vector<double>> pt(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    pt[i] = phi_all(8, alpha, rule.nodes[i]);
  }
  for (int m = 0; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * pt[i][static_cast<std::size_t>(m)] *
               pt[i][static_cast<std::size_t>(n)];
      }
      CHECK(std::fabs(acc - (m == n ? 1.0 : 0.0)) < 1e-13);
    }
  }
  // phi_0 = Gamma(alpha + 1)^{-1/2}.
  CHECK(std::fabs(phi_n(0, alpha, 2.2) - 1.0 / std::sqrt(gamma_fn(alpha + 1.0))) <
        1e-15);
  CHECK(phi_n(5, alpha, 2.2) == phi_all(5, alpha, 2.2)[5]);
}

TEST_CASE("Laguerre zeros", "[special][laguerre]") {
  // Degree 1: single zero at alpha + 1.
  const std::vector<double> z1 = laguerre_zeros(1, 0.4);
  REQUIRE(z1.size() == 1);
  CHECK(std::fabs(z1[0] - 1.4) < 1e-13);

  // Degree 2, alpha = 0: zeros of x^2 - 4x + 2 are 2 +- sqrt(2).
  const std::vector<double> z2 = laguerre_zeros(2, 0.0);
  REQUIRE(z2.size() == 2);
  CHECK(std::fabs(z2[0] - (2.0 - std::sqrt(2.0))) < 1e-12);
  CHECK(std::fabs(z2[1] - (2.0 + std::sqrt(2.0))) < 1e-12);

  // Degree 6: zeros increase, polynomial vanishes at them, and their sum
  // equals the Jacobi-matrix trace sum_k (2k + alpha + 1) = n(n + alpha).
  const double a = 1.3;
  const std::vector<double> z6 = laguerre_zeros(6, a);
  REQUIRE(z6.size() == 6);
  double sum = 0.0;
  for (std::size_t i = 0; i < z6.size(); ++i) {
    if (i > 0) CHECK(z6[i] > z6[i - 1]);
    sum += z6[i];
    const double scale = std::max(
        {1.0, std::fabs(laguerre(5, a, z6[i])), std::fabs(laguerre(7, a, z6[i]))});
    CHECK(std::fabs(laguerre(6, a, z6[i])) <= 1e-12 * scale);
  }
  CHECK(std::fabs(sum - 6.0 * (6.0 + a)) < 1e-10);
}

TEST_CASE("entire Bessel-type series: half-integer closed forms", "[special][bessel]") {
  // For alpha = 1/2 the function reduces to sinh(2 sqrt w) / (sqrt(pi w)),
  // for alpha = -1/2 to cosh(2 sqrt w) / sqrt(pi).  These exercise both the
  // series and the asymptotic branches against elementary functions.
  for (double w : {0.3, 5.0, 80.0, 2000.0, 15000.0}) {
    const double rw = std::sqrt(w);
    const double want_half = std::sinh(2.0 * rw) / (std::sqrt(pi) * rw);
    const double want_mhalf = std::cosh(2.0 * rw) / std::sqrt(pi);
    CHECK(std::fabs(bessel_i_scaled(0.5, w) - want_half) <= 1e-11 * want_half);
    CHECK(std::fabs(bessel_i_scaled(-0.5, w) - want_mhalf) <= 1e-11 * want_mhalf);
  }
  for (const std::complex<double> w :
       {std::complex<double>(3.0, 7.0), std::complex<double>(-40.0, 9.0),
        std::complex<double>(300.0, -1200.0)}) {
    const std::complex<double> rw = std::sqrt(w);
    const std::complex<double> want = std::cosh(2.0 * rw) / std::sqrt(pi);
    CHECK(std::abs(bessel_i_scaled(-0.5, w) - want) <= 1e-11 * std::abs(want));
  }
}

TEST_CASE("entire Bessel-type series: frozen reference values", "[special][bessel]") {
  struct Ref {
    double alpha;
    std::complex<double> w;
    std::complex<double> g;
    double tol;
  };
  // High-precision references spanning the series region, the asymptotic
  // region, the negative real axis, and the handover neighborhood (the two
  // seam entries carry a looser tolerance).
  const Ref refs[] = {
      {-0.5, {4.0, 0.0}, {15.40702051117730519382456, 0.0}, 5e-12},
      {-0.5, {-25.0, 0.1}, {-0.473483958504369301262183, -0.006139207218080111304163722}, 5e-12},
      {0.0, {0.0, 64.0}, {-659.4969043585324240009548, -8190.710020205595597122459}, 5e-12},
      {1.0, {-99.0, -1.0}, {0.005075293086036162005799838, 0.001697957173939824806348181}, 2e-8},
      {2.5, {90.0, 90.0}, {66188.59632989606411317846, 184525.1234004894080748667}, 5e-12},
      {0.37, {-10000.0, 3000.0}, {38660050739.30563121502307, -4366352917.613057709094502}, 5e-12},
      {-0.5, {-106.0, 0.0}, {-0.09595579779600264555259107, 0.0}, 5e-12},
      {2.5, {-97.0, -11.0}, {-0.0009014534955242870067908411, -0.0002575517266276206923100261}, 2e-8},
      {0.0, {1.0, -2.0}, {0.9353653917429619089921599, -2.900234910613707551910813}, 5e-12},
      {1.5, {120.0, -3.0}, {7125224.308663019798410304, -1815139.178483955876313138}, 5e-12},
      {1.0, {25000.0, 0.0}, {3.071836105922635059298102e+133, 0.0}, 5e-12},
      {0.37, {30000.0, -40000.0}, {1.400782466073941420426312e+170, 1.323629861610749447595836e+171}, 5e-12},
  };
  for (const Ref& r : refs) {
    const std::complex<double> got = bessel_i_scaled(r.alpha, r.w);
    CHECK(std::abs(got - r.g) <= r.tol * std::abs(r.g));
  }
  // Real-argument overload agrees with the complex one on the real axis.
  for (double w : {0.5, 42.0, 900.0}) {
    const double real_route = bessel_i_scaled(1.2, w);
    const std::complex<double> complex_route =
        bessel_i_scaled(1.2, std::complex<double>(w, 0.0));
    CHECK(std::abs(complex_route - real_route) <= 1e-11 * real_route);
  }
}

TEST_CASE("exponentially scaled variant", "[special][bessel]") {
  for (double w : {0.2, 9.0, 4000.0}) {
    const double want = std::exp(-2.0 * std::sqrt(w)) * bessel_i_scaled(0.8, w);
    CHECK(std::fabs(bessel_i_scaled_exp(0.8, w) - want) <= 1e-11 * want);
  }
  // Stays finite far beyond the unscaled overflow point and follows the
  // w^{-alpha/2 - 1/4} / (2 sqrt(pi)) law.
  const double w = 1e8;
  const double lead = std::pow(w, -0.25) / (2.0 * std::sqrt(pi));
  const double got = bessel_i_scaled_exp(0.0, w);
  CHECK(std::isfinite(got));
  CHECK(std::fabs(got - lead) <= 1e-3 * lead);
}

TEST_CASE("large-index amplitude law for Laguerre functions", "[special][laguerre]") {
  // The oscillation envelope scales like n^{alpha/2 - 1/4}; quadrupling n
  // multiplies it by 4^{alpha/2 - 1/4}.
  const double alpha = 0.3, y = 2.1;
  const double r1 = laguerre_asymptotic_envelope(400, alpha, y);
  const double r2 = laguerre_asymptotic_envelope(1600, alpha, y);
  const double want = std::pow(4.0, alpha / 2.0 - 0.25);
  CHECK(std::fabs(r2 / r1 - want) < 0.1 * want);

  // The leading oscillatory term tracks the polynomial to within a small
  // fraction of the envelope once n is large.
  for (int n : {2000, 3000}) {
    for (double yy : {0.8, 2.1, 4.4}) {
      const double exact = laguerre(n, alpha, yy);
      const double asym = laguerre_asymptotic(n, alpha, yy);
      const double env = laguerre_asymptotic_envelope(n, alpha, yy);
      CHECK(std::fabs(exact - asym) <= 0.1 * env);
    }
  }
}
