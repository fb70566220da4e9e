#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fhankel/matrix.hpp"
#include "fhankel/operators.hpp"
#include "fhankel/quadrature.hpp"
#include "fhankel/special.hpp"

using namespace fhankel;

namespace {
constexpr double pi = 3.14159265358979323846;

LaguerreCoeffs seeded_coeffs(double alpha, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LaguerreCoeffs f;
  f.alpha = alpha;
  f.a.resize(static_cast<std::size_t>(n));
  for (auto& q : f.a) q = Quaternion{u(rng), u(rng), u(rng), u(rng)};
  return f;
}
}  // namespace

TEST_CASE("expansion evaluation matches a manual sum", "[operators]") {
  const double alpha = 0.6, x = 2.7;
  LaguerreCoeffs f;
  f.alpha = alpha;
  f.a = {Quaternion{1.0}, Quaternion{0.0, 2.0, 0.0, 0.0},
         Quaternion{0.0, 0.0, -1.0, 0.5}};
  const std::vector<double> p = phi_all(2, alpha, x);
  const Quaternion want = p[0] * f.a[0] + p[1] * f.a[1] + p[2] * f.a[2];
  CHECK(abs(eval_laguerre_expansion(f, x) - want) < 1e-14);

  MonomialCoeffs g;
  g.c = {Quaternion{0.5}, Quaternion{0.0, 0.0, 1.0, 0.0}, Quaternion{2.0}};
  const Quaternion q{0.3, 0.1, -0.2, 0.4};
  const Quaternion wg = g.c[0] + q * g.c[1] + q * q * g.c[2];
  CHECK(abs(eval_monomial_expansion(g, q) - wg) < 1e-14);
}

TEST_CASE("norms in both bases", "[operators]") {
  LaguerreCoeffs f = seeded_coeffs(0.5, 6, 7);
  double want = 0.0;
  for (const auto& a : f.a) want += norm_sq(a);
  CHECK(std::fabs(coeff_norm_sq(f) - want) < 1e-14);

  MonomialCoeffs g;
  g.c = {Quaternion{1.0}, Quaternion{0.0, 1.0, 1.0, 0.0}};
  const double beta = 1.3, eta = 2.1;
  const double wm = pi * gamma_moment(0, beta, eta) * 1.0 +
                    pi * gamma_moment(1, beta, eta) * 2.0;
  CHECK(std::fabs(monomial_norm_sq(g, beta, eta) - wm) < 1e-14);
}

TEST_CASE("spectral transform acts diagonally on the basis", "[operators]") {
  const double alpha = 0.6, y = 1.3;
  LaguerreCoeffs f;
  f.alpha = alpha;
  f.a.assign(5, Quaternion{});
  f.a[4] = Quaternion{0.0, 0.0, 1.0, 0.0};  // phi_4 with coefficient j
  const MonomialCoeffs sf = dual_transform_spectral(f, y);
  REQUIRE(sf.c.size() == 5);
  for (int n = 0; n < 4; ++n) CHECK(abs(sf.c[static_cast<std::size_t>(n)]) == 0.0);
  CHECK(abs(sf.c[4] - phi_n(4, alpha, y) * Quaternion{0.0, 0.0, 1.0, 0.0}) <
        1e-15);
}

TEST_CASE("quadrature route agrees with the spectral route", "[operators]") {
  const double alpha = 0.5, y = 0.8;
  const LaguerreCoeffs f = seeded_coeffs(alpha, 8, 11);
  const QuadratureRule rule = gauss_laguerre(120, alpha);
  const MonomialCoeffs sf = dual_transform_spectral(f, y);
  const Quaternion q = embed(quat_k, {0.35, 0.4});
  const Quaternion spectral = eval_monomial_expansion(sf, q);
  const Quaternion quad = dual_transform_quadrature(
      [&](double x) { return eval_laguerre_expansion(f, x); }, y, alpha, rule, q);
  CHECK(abs(spectral - quad) < 1e-10);
  CHECK_THROWS_AS(
      dual_transform_quadrature([](double) { return Quaternion{1.0}; }, y, alpha,
                                gauss_jacobi_unit(8, 1.0, 1.0), q),
      std::invalid_argument);
}

TEST_CASE("adjoint: spectral formula and the pairing identity", "[operators]") {
  const Params params(0.4, 1.2, 2.0, 0.9);
  MonomialCoeffs g;
  g.c = {Quaternion{1.0, 0.5, 0.0, 0.0}, Quaternion{0.0, 0.0, 1.0, -1.0},
         Quaternion{0.3}};
  const LaguerreCoeffs sg = adjoint_apply_spectral(g, params.y, params);
  REQUIRE(sg.a.size() == 3);
  for (int n = 0; n < 3; ++n) {
    const double factor = pi * gamma_moment(n, params.beta, params.eta) *
                          phi_n(n, params.alpha, params.y);
    CHECK(abs(sg.a[static_cast<std::size_t>(n)] -
              factor * g.c[static_cast<std::size_t>(n)]) < 1e-14);
  }

  // <S f, G> in the ball equals <f, S* G> on the half line (coefficients).
  const LaguerreCoeffs f = seeded_coeffs(params.alpha, 3, 21);
  const MonomialCoeffs sf = dual_transform_spectral(f, params.y);
  Quaternion lhs{}, rhs{};
  for (int n = 0; n < 3; ++n) {
    lhs += pi * gamma_moment(n, params.beta, params.eta) *
           (conj(sf.c[static_cast<std::size_t>(n)]) *
            g.c[static_cast<std::size_t>(n)]);
    rhs += conj(f.a[static_cast<std::size_t>(n)]) *
           sg.a[static_cast<std::size_t>(n)];
  }
  CHECK(abs(lhs - rhs) < 1e-14);
}

TEST_CASE("adjoint: quadrature route", "[operators]") {
  const Params params(0.4, 1.2, 2.0, 0.9);
  MonomialCoeffs g;
  g.c = {Quaternion{0.7}, Quaternion{0.0, 1.0, 0.0, 0.0}, Quaternion{-0.4}};
  const LaguerreCoeffs sg = adjoint_apply_spectral(g, params.y, params);
  // The kernel row is an entire series in p, so angular modes m + k*ntheta
  // alias onto m; a wide angular count keeps the aliased tail negligible.
  const DiskRule rule = disk_rule(10, 1024, params.beta, params.eta);
  for (double x : {0.4, 2.0}) {
    const Quaternion got = adjoint_apply_quadrature(
        [&](const Quaternion& p) { return eval_monomial_expansion(g, p); }, x,
        params.y, params, rule);
    const Quaternion want = eval_laguerre_expansion(sg, x);
    CHECK(abs(got - want) < 1e-10);
  }
}

TEST_CASE("fractional transform is diagonal with left factors", "[operators]") {
  const Quaternion t = embed(quat_i, {0.5, 0.2});
  LaguerreCoeffs f;
  f.alpha = 0.0;
  f.a.assign(4, Quaternion{});
  f.a[3] = quat_j;
  const LaguerreCoeffs lf = hankel_fractional_apply(f, t);
  REQUIRE(lf.a.size() == 4);
  CHECK(abs(lf.a[3] - pow(t, 3) * quat_j) < 1e-15);
  CHECK(abs(lf.a[0]) == 0.0);
}

TEST_CASE("composition respects slices", "[operators]") {
  const Quaternion t = embed(quat_j, {0.5, 0.1});
  const Quaternion u = embed(quat_j, {0.3, -0.6});
  CHECK(abs(hankel_compose(t, u) - t * u) < 1e-15);
  // Real factors compose with anything.
  CHECK_NOTHROW(hankel_compose(Quaternion{0.5}, embed(quat_k, {0.1, 0.2})));
  CHECK_THROWS_AS(
      hankel_compose(embed(quat_i, {0.5, 0.1}), embed(quat_j, {0.3, 0.6})),
      std::invalid_argument);
}

TEST_CASE("circle extraction recovers quaternion coefficients", "[operators]") {
  // Includes j/k components, whose recovery is sensitive to the side the
  // Fourier phase is applied on.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MonomialCoeffs g;
  g.c.resize(7);
  for (auto& c : g.c) c = Quaternion{u(rng), u(rng), u(rng), u(rng)};
  const MonomialCoeffs got = extract_monomial_coeffs(
      [&](const Quaternion& p) { return eval_monomial_expansion(g, p); }, 6, 0.7,
      64);
  REQUIRE(got.c.size() == 7);
  for (std::size_t m = 0; m < 7; ++m) {
    CHECK(abs(got.c[m] - g.c[m]) < 1e-12);
  }
}

TEST_CASE("operator matrix: closed and discretized forms agree", "[operators]") {
  const Params params(0.5, 1.0, 2.0, 1.1);
  const int n = 12;
  const Matrix closed = build_operator_matrix(params.y, params, n,
                                              OperatorForm::closed);
  const Matrix disc = build_operator_matrix(params.y, params, n,
                                            OperatorForm::discretized);
  REQUIRE(closed.rows == n);
  REQUIRE(closed.cols == n);
  CHECK(max_abs_diff(closed, disc) < 1e-10);

  // The closed form is diagonal with entries sqrt(pi gamma_m) phi_m(y).
  for (int m = 0; m < n; ++m) {
    const double want = std::sqrt(pi * gamma_moment(m, params.beta, params.eta)) *
                        phi_n(m, params.alpha, params.y);
    CHECK(std::abs(closed.at(m, m) - std::complex<double>(want, 0.0)) < 1e-13);
  }
}

TEST_CASE("null-space detection at Laguerre zeros", "[operators]") {
  const double alpha = 0.5;
  const std::vector<double> zeros = laguerre_zeros(4, alpha);
  for (double z : zeros) {
    const std::vector<int> idx = null_space_indices(z, alpha, 30, 1e-9);
    CHECK(std::find(idx.begin(), idx.end(), 4) != idx.end());
  }
  CHECK(null_space_indices(0.0, alpha, 30, 1e-9).empty());
  CHECK(null_space_indices(0.37, alpha, 30, 1e-9).empty());
}

TEST_CASE("range basis report", "[operators]") {
  const double alpha = 0.0;
  const std::vector<double> zeros = laguerre_zeros(2, alpha);
  const RangeBasisReport at_zero = range_basis_report(zeros[0], alpha, 20);
  CHECK(at_zero.strict_inclusion);
  CHECK(at_zero.null_indices == std::vector<int>{2});
  CHECK(at_zero.surviving.size() == 20);  // 21 indices minus the lost one

  const RangeBasisReport at_origin = range_basis_report(0.0, alpha, 20);
  CHECK_FALSE(at_origin.strict_inclusion);
  CHECK(at_origin.surviving.size() == 21);
}

TEST_CASE("slice derivative: regular and anti-regular probes", "[operators]") {
  // d-bar of q^3 vanishes; d-bar of conj(q) equals 1.
  const Quaternion q = embed(quat_i, {0.3, 0.4});
  const auto cube = [](const Quaternion& p) { return pow(p, 3); };
  CHECK(abs(slice_derivative(cube, q)) < 1e-9);
  const auto bar = [](const Quaternion& p) { return conj(p); };
  CHECK(abs(slice_derivative(bar, q) - Quaternion{1.0}) < 1e-9);
}

TEST_CASE("companion transform at the origin", "[operators]") {
  // The zero-frozen transform scaled by Gamma(alpha + 1).
  const double alpha = 1.5;
  const QuadratureRule rule = gauss_laguerre(150, alpha);
  const LaguerreCoeffs f = seeded_coeffs(alpha, 5, 3);
  const auto f_eval = [&](double x) { return eval_laguerre_expansion(f, x); };
  const Quaternion q = embed(quat_j, {0.2, 0.6});
  const Quaternion got = bargmann_apply(f_eval, q, alpha, rule);
  const Quaternion want =
      gamma_fn(alpha + 1.0) * dual_transform_quadrature(f_eval, 0.0, alpha, rule, q);
  CHECK(abs(got - want) < 1e-11);
}
