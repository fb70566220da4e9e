#pragma once

// The identity suite: every analytic fact the library is built on, checked
// numerically on fixed grids with pinned tolerances.  Each check reports a
// single worst-case measured value; the grids and tolerances are frozen
// here and are not adaptive.  The CLI `verify` command and the acceptance
// runner both drive this suite.
//
// Naming: checks are numbered so that lexicographic order matches the
// logical order of the suite; a few numbers carry two checks (an a/b pair)
// when one criterion pins two different tolerances.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fhankel/kernels.hpp"
#include "fhankel/matrix.hpp"
#include "fhankel/operators.hpp"
#include "fhankel/quadrature.hpp"
#include "fhankel/quaternion.hpp"
#include "fhankel/special.hpp"
#include "fhankel/spectral.hpp"

namespace fhankel {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned seed = 12345;
  double tol_override = 0.0;  // > 0 replaces every pinned tolerance
  std::string filter;         // substring match on check names; empty = all
};

namespace detail {

// A value so large that any pinned tolerance rejects it: used when a check
// with a structural sub-condition (set membership, emptiness) fails that
// sub-condition and has no meaningful residual to report.
inline constexpr double structural_failure = 1e9;

inline Quaternion on_slice(double modulus, double phase, const Quaternion& axis) {
  return Quaternion{modulus * std::cos(phase)} + axis * (modulus * std::sin(phase));
}

inline std::vector<Quaternion> random_coeffs(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Quaternion> c(static_cast<std::size_t>(n));
  for (auto& q : c) q = Quaternion{u(rng), u(rng), u(rng), u(rng)};
  return c;
}

inline std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// The three slice axes used by quaternion-grid checks.
inline std::vector<Quaternion> slice_axes() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  return {quat_i, Quaternion{0.0, 0.0, s2, s2}, Quaternion{0.0, s3, s3, s3}};
}

inline const std::vector<double>& slice_phases() {
  static const std::vector<double> p = {0.4, 1.3, 2.3};
  return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 01: closed kernel vs 80-term rank-one series (the product formula).

inline CheckResult check_hille_hardy() {
  CheckResult r;
  r.name = "01_hille_hardy";
  r.tolerance = 1e-9;
  const double alphas[] = {-0.5, 0.0, 1.0, 2.5};
  const double pts[] = {0.1, 1.0, 5.0, 10.0};
  const double moduli[] = {0.3, 0.5, 0.7};
  const auto axes = detail::slice_axes();
  const auto& phases = detail::slice_phases();
  double worst = 0.0;
  for (double alpha : alphas) {
    for (double x : pts) {
      for (double y : pts) {
        for (double m : moduli) {
          for (std::size_t s = 0; s < axes.size(); ++s) {
            const Quaternion q = detail::on_slice(m, phases[s], axes[s]);
            const Quaternion closed = hankel_kernel_closed(q, x, y, alpha);
            const Quaternion series = hankel_kernel_series(q, x, y, alpha, 80);
            worst = std::max(worst, abs(closed - series));
          }
        }
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |closed - series(80)| over the alpha/x/y/slice grid";
  return r;
}

// ---------------------------------------------------------------------------
// 02: the quadrature transform reproduces the eigenrelation
// S(phi_n)(q) = phi_n(y) q^n.

inline CheckResult check_eigen_relation() {
  CheckResult r;
  r.name = "02_eigen_relation";
  r.tolerance = 1e-8;
  const double alphas[] = {0.0, 1.5};
  const double ys[] = {0.0, 0.5, 3.0};
  const double moduli[] = {0.3, 0.6, 0.9};
  const int nmax = 15;
  const auto axes = detail::slice_axes();
  const auto& phases = detail::slice_phases();
  double worst = 0.0;
  for (double alpha : alphas) {
    const QuadratureRule rule = gauss_laguerre(200, alpha);
    std::vector<std::vector<double>> pt(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      pt[i] = phi_all(nmax, alpha, rule.nodes[i]);
    }
    for (double y : ys) {
      const std::vector<double> py = phi_all(nmax, alpha, y);
      for (double m : moduli) {
        for (std::size_t s = 0; s < axes.size(); ++s) {
          const Quaternion q = detail::on_slice(m, phases[s], axes[s]);
          const SlicePoint sp = slice_decompose(q);
          const std::complex<double> z = sp.complex_value();
          std::vector<std::complex<double>> acc(nmax + 1, 0.0);
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const std::complex<double> rv =
                hankel_kernel_closed(z, rule.nodes[i], y, alpha) * rule.weights[i];
            for (int n = 0; n <= nmax; ++n) {
              acc[static_cast<std::size_t>(n)] += rv * pt[i][static_cast<std::size_t>(n)];
            }
          }
          std::complex<double> zn{1.0, 0.0};
          for (int n = 0; n <= nmax; ++n) {
            worst = std::max(
                worst, std::abs(acc[static_cast<std::size_t>(n)] -
                                py[static_cast<std::size_t>(n)] * zn));
            zn *= z;
          }
        }
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |S(phi_n)(q) - phi_n(y) q^n|, n <= 15, 200-node rule";
  return r;
}

// ---------------------------------------------------------------------------
// 03: disk rule moments <e_m, e_n> = pi gamma_n delta_mn, and the Parseval
// norm identity on a random 20-term vector.

inline CheckResult check_disk_moments() {
  CheckResult r;
  r.name = "03_disk_moments";
  r.tolerance = 1e-12;
  const double pi = 3.14159265358979323846;
  const double sets[][2] = {{1.0, 1.0}, {2.0, 1.5}, {1.0, 3.0}};
  double worst = 0.0;
  for (const auto& be : sets) {
    const DiskRule rule = disk_rule(default_disk_radial, default_disk_angular,
                                    be[0], be[1]);
    const std::vector<double> gam = gamma_moment_all(10, be[0], be[1]);
    std::vector<std::complex<double>> mom(11 * 11, 0.0);
    for (int j = 0; j < rule.nr; ++j) {
      const double wj = rule.node_weight(j);
      for (int l = 0; l < rule.ntheta; ++l) {
        const std::complex<double> p = rule.node(j, l);
        std::complex<double> pw[11];
        pw[0] = 1.0;
        for (int k = 1; k <= 10; ++k) pw[k] = pw[k - 1] * p;
        for (int mi = 0; mi <= 10; ++mi) {
          for (int ni = 0; ni <= 10; ++ni) {
            mom[static_cast<std::size_t>(mi * 11 + ni)] +=
                std::conj(pw[mi]) * pw[ni] * wj;
          }
        }
      }
    }
    for (int mi = 0; mi <= 10; ++mi) {
      for (int ni = 0; ni <= 10; ++ni) {
        const std::complex<double> want =
            mi == ni ? std::complex<double>(pi * gam[static_cast<std::size_t>(ni)], 0.0)
                     : std::complex<double>(0.0, 0.0);
        worst = std::max(
            worst, std::abs(mom[static_cast<std::size_t>(mi * 11 + ni)] - want));
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |<e_m,e_n> - pi gamma_n delta| over three (beta,eta) sets";
  return r;
}

inline CheckResult check_parseval_norm(unsigned seed) {
  CheckResult r;
  r.name = "03_parseval_norm";
  r.tolerance = 1e-8;
  const double sets[][2] = {{1.0, 1.0}, {2.0, 1.5}, {1.0, 3.0}};
  const double alpha = 0.5;
  const double y = 0.7;
  std::mt19937 rng(seed);
  double worst = 0.0;
  for (const auto& be : sets) {
    LaguerreCoeffs f;
    f.alpha = alpha;
    f.a = detail::random_coeffs(rng, 20);
    const MonomialCoeffs c = dual_transform_spectral(f, y);
    const double by_coeff = monomial_norm_sq(c, be[0], be[1]);
    const DiskRule rule = disk_rule(default_disk_radial, default_disk_angular,
                                    be[0], be[1]);
    double by_quad = 0.0;
    for (int j = 0; j < rule.nr; ++j) {
      const double wj = rule.node_weight(j);
      for (int l = 0; l < rule.ntheta; ++l) {
        const Quaternion p = embed(quat_i, rule.node(j, l));
        by_quad += norm_sq(eval_monomial_expansion(c, p)) * wj;
      }
    }
    worst = std::max(worst, std::fabs(by_quad - by_coeff) / by_coeff);
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "relative gap between disk-quadrature and coefficient norms";
  return r;
}

// ---------------------------------------------------------------------------
// 04: the ball kernel reproduces monomials: <K(., q), e_m> = q^m.

inline CheckResult check_reproducing_property() {
  CheckResult r;
  r.name = "04_reproducing_property";
  r.tolerance = 1e-8;
  const double sets[][2] = {{1.0, 1.0}, {2.0, 1.5}, {1.0, 3.0}};
  const double moduli[] = {0.2, 0.45, 0.6};
  const auto axes = detail::slice_axes();
  const auto& phases = detail::slice_phases();
  double worst = 0.0;
  for (const auto& be : sets) {
    const DiskRule rule = disk_rule(default_disk_radial, default_disk_angular,
                                    be[0], be[1]);
    for (double m : moduli) {
      for (std::size_t s = 0; s < axes.size(); ++s) {
        const Quaternion q = detail::on_slice(m, phases[s], axes[s]);
        std::vector<Quaternion> acc(11);
        for (int j = 0; j < rule.nr; ++j) {
          const double wj = rule.node_weight(j);
          for (int l = 0; l < rule.ntheta; ++l) {
            const std::complex<double> pz = rule.node(j, l);
            const Quaternion p = embed(quat_i, pz);
            const Quaternion kc =
                conj(bergman_kernel_series(p, q, be[0], be[1])) * wj;
            std::complex<double> pm{1.0, 0.0};
            for (int mi = 0; mi <= 10; ++mi) {
              acc[static_cast<std::size_t>(mi)] += kc * embed(quat_i, pm);
              pm *= pz;
            }
          }
        }
        Quaternion qm{1.0};
        for (int mi = 0; mi <= 10; ++mi) {
          worst = std::max(worst, abs(acc[static_cast<std::size_t>(mi)] - qm));
          qm = qm * q;
        }
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |<K(.,q), e_m> - q^m|, m <= 10, |q| <= 0.6";
  return r;
}

// ---------------------------------------------------------------------------
// 05a: equal-weight diagonal identity
// R_{|q|^2}(y, y) = integral |R_q(x, y)|^2 x^alpha e^{-x} dx.

inline CheckResult check_equal_weight_diagonal() {
  CheckResult r;
  r.name = "05_equal_weight_diagonal";
  r.tolerance = 1e-8;
  const double alphas[] = {-0.5, 0.0, 1.0, 2.5};
  const double ys[] = {0.1, 1.0, 5.0, 10.0};
  const double moduli[] = {0.3, 0.5, 0.7};
  const auto& phases = detail::slice_phases();
  double worst = 0.0;
  for (double alpha : alphas) {
    const QuadratureRule rule = gauss_laguerre(256, alpha);
    for (double y : ys) {
      for (double m : moduli) {
        for (double ph : phases) {
          const std::complex<double> z = std::polar(m, ph);
          const double lhs =
              hankel_kernel_closed(std::complex<double>(m * m, 0.0), y, y, alpha)
                  .real();
          double rhs = 0.0;
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            // Scaled summation: |R| alone can exceed sqrt(DBL_MAX) here, so
            // fold in sqrt(w_i) before squaring.
            const double t = std::sqrt(rule.weights[i]) *
                             std::abs(hankel_kernel_closed(z, rule.nodes[i], y,
                                                           alpha));
            rhs += t * t;
          }
          worst = std::max(worst, std::fabs(rhs - lhs) / std::fabs(lhs));
        }
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "relative gap in the |R_q|^2 diagonal identity, 256-node rule";
  return r;
}

// 05b: the ball kernel reproduces kernel rows:
// <K(., q), R_.(x, y)> = R_q(x, y) on the slice, |q| <= 0.6.

inline CheckResult check_kernel_reproduction() {
  CheckResult r;
  r.name = "05_kernel_reproduction";
  r.tolerance = 1e-7;
  const double beta = 1.0;
  const double eta = 7.0;
  const DiskRule rule = disk_rule(64, 640, beta, eta);
  const double alphas[] = {-0.5, 0.0, 1.0, 2.5};
  const double pts[] = {0.1, 1.0, 5.0, 10.0};
  const double moduli[] = {0.3, 0.5};
  const auto& phases = detail::slice_phases();

  // q-independent node data.
  const int total = rule.nr * rule.ntheta;
  std::vector<std::complex<double>> nodes(static_cast<std::size_t>(total));
  std::vector<double> weights(static_cast<std::size_t>(total));
  {
    int idx = 0;
    for (int j = 0; j < rule.nr; ++j) {
      const double wj = rule.node_weight(j);
      for (int l = 0; l < rule.ntheta; ++l, ++idx) {
        nodes[static_cast<std::size_t>(idx)] = rule.node(j, l);
        weights[static_cast<std::size_t>(idx)] = wj;
      }
    }
  }
  std::vector<std::complex<double>> qs;
  for (double m : moduli) {
    for (double ph : phases) qs.push_back(std::polar(m, ph));
  }
  // conj(K(p, q)) w at every node, for each q (beta = 1: closed slice form).
  std::vector<std::vector<std::complex<double>>> kw(qs.size());
  for (std::size_t iq = 0; iq < qs.size(); ++iq) {
    kw[iq].resize(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
      kw[iq][static_cast<std::size_t>(i)] =
          std::conj(bergman_kernel_closed_slice(nodes[static_cast<std::size_t>(i)],
                                                qs[iq], eta)) *
          weights[static_cast<std::size_t>(i)];
    }
  }

  double worst = 0.0;
  std::vector<std::complex<double>> rv(static_cast<std::size_t>(total));
  for (double alpha : alphas) {
    for (double x : pts) {
      for (double y : pts) {
        for (int i = 0; i < total; ++i) {
          rv[static_cast<std::size_t>(i)] = hankel_kernel_closed(
              nodes[static_cast<std::size_t>(i)], x, y, alpha);
        }
        for (std::size_t iq = 0; iq < qs.size(); ++iq) {
          std::complex<double> acc = 0.0;
          for (int i = 0; i < total; ++i) {
            acc += kw[iq][static_cast<std::size_t>(i)] *
                   rv[static_cast<std::size_t>(i)];
          }
          const std::complex<double> want =
              hankel_kernel_closed(qs[iq], x, y, alpha);
          worst = std::max(worst, std::abs(acc - want));
        }
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |<K(.,q), R_.(x,y)> - R_q(x,y)|, disk rule (64, 640)";
  return r;
}

// ---------------------------------------------------------------------------
// 06: singular values of the discretized operator matrix vs the closed
// sequence.

inline CheckResult check_svd_cross() {
  CheckResult r;
  r.name = "06_svd_cross_check";
  r.tolerance = 1e-6;
  const double sets[][4] = {{0.0, 1.0, 1.0, 1.0}, {1.5, 2.0, 1.5, 0.5}};
  const int n = 40;
  double worst = 0.0;
  for (const auto& s : sets) {
    const Params params(s[0], s[1], s[2], s[3]);
    const double y = s[3];
    const Matrix m = build_operator_matrix(y, params, n, OperatorForm::discretized);
    const Svd f = svd_small(m);
    std::vector<double> closed = singular_values_closed(y, params, n - 1);
    std::stable_sort(closed.begin(), closed.end(), std::greater<double>());
    for (int k = 0; k < 10; ++k) {
      worst = std::max(worst,
                       std::fabs(f.sigma[static_cast<std::size_t>(k)] -
                                 closed[static_cast<std::size_t>(k)]) /
                           closed[static_cast<std::size_t>(k)]);
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "top-10 relative gap, discretized (N=40) vs closed spectrum";
  return r;
}

// ---------------------------------------------------------------------------
// 07: duality <G, S f>_ball = <S* G, f>_halfline, coefficient route and
// quadrature route.

inline CheckResult check_duality_coeff(unsigned seed) {
  CheckResult r;
  r.name = "07_duality_coeff";
  r.tolerance = 1e-10;
  const double pi = 3.14159265358979323846;
  const Params params(0.5, 1.0, 2.0, 0.7);
  std::mt19937 rng(seed);
  LaguerreCoeffs f;
  f.alpha = params.alpha;
  f.a = detail::random_coeffs(rng, 20);
  MonomialCoeffs g;
  g.c = detail::random_coeffs(rng, 13);

  const MonomialCoeffs sf = dual_transform_spectral(f, params.y);
  const std::vector<double> gam =
      gamma_moment_all(static_cast<int>(sf.c.size()) - 1, params.beta, params.eta);
  Quaternion lhs{};
  for (std::size_t m = 0; m < g.c.size() && m < sf.c.size(); ++m) {
    lhs += (pi * gam[m]) * (conj(g.c[m]) * sf.c[m]);
  }
  const LaguerreCoeffs sg = adjoint_apply_spectral(g, params.y, params);
  Quaternion rhs{};
  for (std::size_t n = 0; n < sg.a.size() && n < f.a.size(); ++n) {
    rhs += conj(sg.a[n]) * f.a[n];
  }
  r.measured = abs(lhs - rhs);
  r.pass = r.measured <= r.tolerance;
  r.detail = "coefficient-route pairing gap, 20-term f / 13-term G";
  return r;
}

inline CheckResult check_duality_quadrature(unsigned seed) {
  CheckResult r;
  r.name = "07_duality_quadrature";
  r.tolerance = 1e-7;
  const Params params(0.5, 1.0, 2.0, 0.7);
  std::mt19937 rng(seed);
  LaguerreCoeffs f;
  f.alpha = params.alpha;
  f.a = detail::random_coeffs(rng, 20);
  MonomialCoeffs g;
  g.c = detail::random_coeffs(rng, 13);

  const QuadratureRule hrule = gauss_laguerre(200, params.alpha);
  const auto f_eval = [&](double x) { return eval_laguerre_expansion(f, x); };
  const auto g_eval = [&](const Quaternion& p) {
    return eval_monomial_expansion(g, p);
  };

  // LHS: resolve S f into monomial coefficients from circle samples, then
  // pair with G by the disk rule.
  const auto sf_eval = [&](const Quaternion& q) {
    return dual_transform_quadrature(f_eval, params.y, params.alpha, hrule, q);
  };
  const MonomialCoeffs sf = extract_monomial_coeffs(sf_eval, 40, 0.5, 256);
  const DiskRule pair_rule =
      disk_rule(default_disk_radial, default_disk_angular, params.beta, params.eta);
  Quaternion lhs{};
  for (int j = 0; j < pair_rule.nr; ++j) {
    const double wj = pair_rule.node_weight(j);
    for (int l = 0; l < pair_rule.ntheta; ++l) {
      const Quaternion p = embed(quat_i, pair_rule.node(j, l));
      lhs += (conj(g_eval(p)) * eval_monomial_expansion(sf, p)) * wj;
    }
  }

  // RHS: S* G on the half line by the disk rule, paired against f.
  const DiskRule adj_rule = disk_rule(10, 1024, params.beta, params.eta);
  Quaternion rhs{};
  for (std::size_t i = 0; i < hrule.nodes.size(); ++i) {
    const Quaternion sg = adjoint_apply_quadrature(g_eval, hrule.nodes[i],
                                                   params.y, params, adj_rule);
    rhs += (conj(sg) * f_eval(hrule.nodes[i])) * hrule.weights[i];
  }

  r.measured = abs(lhs - rhs);
  r.pass = r.measured <= r.tolerance;
  r.detail = "quadrature-route pairing gap (circle extraction vs disk adjoint)";
  return r;
}

// ---------------------------------------------------------------------------
// 08: fractional semigroup on a slice: L_t L_u = L_{t u}.

inline CheckResult check_semigroup(unsigned seed) {
  CheckResult r;
  r.name = "08_semigroup";
  r.tolerance = 1e-14;
  std::mt19937 rng(seed);
  LaguerreCoeffs f;
  f.alpha = 0.5;
  f.a = detail::random_coeffs(rng, 25);

  const double s6 = 1.0 / std::sqrt(6.0);
  const Quaternion axes[] = {quat_i,
                             Quaternion{0.0, s6, 2.0 * s6, -s6}};
  const double specs[][4] = {
      {0.6, 0.7, 0.9, 2.0}, {0.5, 1.1, 0.8, 2.6}, {0.7, 0.0, 0.4, 1.9}};
  double worst = 0.0;
  for (const Quaternion& axis : axes) {
    for (const auto& sp : specs) {
      const Quaternion t = detail::on_slice(sp[0], sp[1], axis);
      const Quaternion u = detail::on_slice(sp[2], sp[3], axis);
      const LaguerreCoeffs two_step =
          hankel_fractional_apply(hankel_fractional_apply(f, u), t);
      const LaguerreCoeffs one_step =
          hankel_fractional_apply(f, hankel_compose(t, u));
      for (std::size_t n = 0; n < f.a.size(); ++n) {
        worst = std::max(worst, abs(two_step.a[n] - one_step.a[n]));
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max coefficient gap between L_t L_u and L_{tu} on shared slices";
  return r;
}

// ---------------------------------------------------------------------------
// 09: power-law decay exponents of c_n.

inline CheckResult check_decay_origin() {
  CheckResult r;
  r.name = "09_decay_slope_origin";
  r.tolerance = 0.05;
  const double sets[][2] = {{0.0, 2.0}, {1.0, 1.0}};  // (alpha, eta)
  double worst = 0.0;
  std::string detail = "slope - (alpha - eta) at y = 0:";
  for (const auto& s : sets) {
    const Params params(s[0], 1.0, s[1], 0.0);
    const DecayFit fit = decay_fit(0.0, params, 500, 5000);
    const double dev = std::fabs(fit.slope - (s[0] - s[1]));
    worst = std::max(worst, dev);
    detail += " " + detail::format_g(fit.slope);
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = detail;
  return r;
}

inline CheckResult check_decay_offaxis() {
  CheckResult r;
  r.name = "09_decay_slope_offaxis";
  r.tolerance = 0.2;
  const double etas[] = {1.0, 2.0};
  double worst = 0.0;
  std::string detail = "windowed slope + (eta + 1/2) at y = 1:";
  for (double eta : etas) {
    const Params params(0.0, 1.0, eta, 1.0);
    const DecayFit fit = decay_fit(1.0, params, 500, 4000);
    const double dev = std::fabs(fit.slope + (eta + 0.5));
    worst = std::max(worst, dev);
    detail += " " + detail::format_g(fit.slope);
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = detail;
  return r;
}

// ---------------------------------------------------------------------------
// 10: Schatten tail behaviour on both sides of the critical exponent.

inline CheckResult check_schatten_tail() {
  CheckResult r;
  r.name = "10_schatten_tail";
  r.tolerance = 1e-3;
  const Params off(0.0, 1.0, 1.0, 1.0);
  const Params origin(0.0, 1.0, 1.0, 0.0);
  const SchattenReport a = schatten_report(1.0, off, 1.5, 5000);
  const SchattenReport b = schatten_report(0.0, origin, 3.0, 5000);
  r.measured = std::max(a.tail_mean, b.tail_mean);
  r.pass = r.measured <= r.tolerance;
  r.detail = "per-index tail means for the convergent cases (p=1.5 y=1, p=3 y=0)";
  return r;
}

inline CheckResult check_schatten_divergence() {
  CheckResult r;
  r.name = "10_schatten_divergence";
  r.tolerance = 0.05;  // pass iff every divergent-case block slope > -0.05
  const Params off(0.0, 1.0, 1.0, 1.0);
  const Params origin(0.0, 1.0, 1.0, 0.0);
  const SchattenReport a = schatten_report(1.0, off, 1.0, 5000);
  const SchattenReport b = schatten_report(0.0, origin, 1.5, 5000);
  r.measured = std::max(-a.block_slope, -b.block_slope);
  r.pass = r.measured <= r.tolerance;
  r.detail = "negated dyadic block slopes (p=1 y=1: " +
             detail::format_g(a.block_slope) +
             ", p=1.5 y=0: " + detail::format_g(b.block_slope) + ")";
  return r;
}

// ---------------------------------------------------------------------------
// 11: null space at Laguerre zeros; empty null space at y = 0.

inline CheckResult check_null_space(unsigned seed) {
  CheckResult r;
  r.name = "11_null_space";
  r.tolerance = 1e-7;
  const double alpha = 0.0;
  const Params params(alpha, 1.0, 2.0, 0.0);
  const QuadratureRule hrule = gauss_laguerre(200, alpha);
  const std::vector<double> zeros = laguerre_zeros(5, alpha);
  double worst = 0.0;
  bool structure_ok = true;

  for (double y : zeros) {
    const std::vector<int> ns = null_space_indices(y, alpha, 50, 1e-9);
    if (std::find(ns.begin(), ns.end(), 5) == ns.end()) structure_ok = false;
    // ||S phi_5||: transform the basis vector through quadrature, resolve
    // into monomial coefficients, take the ball norm.
    LaguerreCoeffs f;
    f.alpha = alpha;
    f.a.assign(6, Quaternion{});
    f.a[5] = Quaternion{1.0};
    const auto f_eval = [&](double x) { return eval_laguerre_expansion(f, x); };
    const auto sf_eval = [&](const Quaternion& q) {
      return dual_transform_quadrature(f_eval, y, alpha, hrule, q);
    };
    const MonomialCoeffs sf = extract_monomial_coeffs(sf_eval, 40, 0.8, 512);
    worst = std::max(
        worst, std::sqrt(monomial_norm_sq(sf, params.beta, params.eta)));
  }

  if (!null_space_indices(0.0, alpha, 50, 1e-9).empty()) structure_ok = false;
  const RangeBasisReport rep = range_basis_report(0.0, alpha, 50);
  if (rep.strict_inclusion || rep.surviving.size() != 51) structure_ok = false;

  // Generic y never triggers the zero test.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double y = u(rng);
    if (y == 0.0) continue;
    if (!null_space_indices(y, alpha, 50, 1e-9).empty()) structure_ok = false;
  }

  r.measured = structure_ok ? worst : detail::structural_failure;
  r.pass = r.measured <= r.tolerance;
  r.detail = structure_ok
                 ? "max ||S phi_5|| over the five zeros of L_5 (membership ok)"
                 : "null-space membership structure violated";
  return r;
}

// ---------------------------------------------------------------------------
// 12: Bargmann companion transform is Gamma(alpha+1) times the y = 0
// transform.

inline CheckResult check_bargmann(unsigned seed) {
  CheckResult r;
  r.name = "12_bargmann_proportionality";
  r.tolerance = 1e-10;
  const double alphas[] = {0.0, 1.5};
  const double s2 = 1.0 / std::sqrt(2.0);
  std::mt19937 rng(seed);
  double worst = 0.0;
  for (double alpha : alphas) {
    const QuadratureRule rule = gauss_laguerre(200, alpha);
    const double ga = gamma_fn(alpha + 1.0);
    std::vector<LaguerreCoeffs> fs;
    for (int n : {0, 1, 4, 9}) {
      LaguerreCoeffs f;
      f.alpha = alpha;
      f.a.assign(static_cast<std::size_t>(n) + 1, Quaternion{});
      f.a.back() = Quaternion{1.0};
      fs.push_back(f);
    }
    {
      LaguerreCoeffs f;
      f.alpha = alpha;
      f.a = detail::random_coeffs(rng, 6);
      fs.push_back(f);
    }
    const Quaternion qs[] = {
        Quaternion{0.0}, Quaternion{0.4}, Quaternion{-0.3},
        detail::on_slice(0.7, 2.2, Quaternion{0.0, 0.0, s2, s2}),
        detail::on_slice(0.5, 1.0, quat_i)};
    for (const LaguerreCoeffs& f : fs) {
      const auto f_eval = [&](double x) { return eval_laguerre_expansion(f, x); };
      for (const Quaternion& q : qs) {
        const Quaternion b = bargmann_apply(f_eval, q, alpha, rule);
        const Quaternion s0 =
            dual_transform_quadrature(f_eval, 0.0, alpha, rule, q);
        worst = std::max(worst, abs(b - ga * s0));
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |B f(q) - Gamma(alpha+1) S_0 f(q)| over the q grid";
  return r;
}

// ---------------------------------------------------------------------------
// 13: polar factorization S = U |S| with U^*U an orthogonal projection.

inline CheckResult check_polar(unsigned seed) {
  CheckResult r;
  r.name = "13_polar_factorization";
  r.tolerance = 1e-12;
  double worst = 0.0;
  bool structure_ok = true;

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ua(-0.9, 2.5);
  std::uniform_real_distribution<double> ub(0.5, 2.5);
  std::uniform_real_distribution<double> ue(0.5, 3.0);
  std::uniform_real_distribution<double> uy(0.0, 4.0);
  for (int k = 0; k < 5; ++k) {
    const Params params(ua(rng), ub(rng), ue(rng), uy(rng));
    const PolarCheck pc = svd_factorization_check(params.y, params, 30);
    worst = std::max(worst,
                     std::max(pc.factorization_residual, pc.projection_residual));
  }
  {
    const Params params(0.0, 1.0, 2.0, 0.0);
    const PolarCheck pc = svd_factorization_check(0.0, params, 30);
    worst = std::max(worst,
                     std::max(pc.factorization_residual, pc.projection_residual));
    if (!pc.zero_columns.empty()) structure_ok = false;
  }
  {
    const std::vector<double> zeros = laguerre_zeros(5, 0.0);
    const Params params(0.0, 1.0, 2.0, zeros[2]);
    const PolarCheck pc = svd_factorization_check(zeros[2], params, 30);
    worst = std::max(worst,
                     std::max(pc.factorization_residual, pc.projection_residual));
    if (std::find(pc.zero_columns.begin(), pc.zero_columns.end(), 5) ==
        pc.zero_columns.end()) {
      structure_ok = false;
    }
  }
  r.measured = structure_ok ? worst : detail::structural_failure;
  r.pass = r.measured <= r.tolerance;
  r.detail = structure_ok ? "max polar residual at N = 30 over parameter draws"
                          : "zero-column structure of U violated";
  return r;
}

// ---------------------------------------------------------------------------
// 14: transform images are slice regular: d-bar(S f) = 0 to O(h^2).

inline CheckResult check_slice_regularity(unsigned seed) {
  CheckResult r;
  r.name = "14_slice_regularity";
  r.tolerance = 1e-6;
  const double h = 1e-4;
  std::mt19937 rng(seed);
  LaguerreCoeffs f;
  f.alpha = 0.5;
  f.a = detail::random_coeffs(rng, 10);
  const QuadratureRule rule = gauss_laguerre(200, f.alpha);
  const auto f_eval = [&](double x) { return eval_laguerre_expansion(f, x); };

  double worst = 0.0;
  const double pi = 3.14159265358979323846;
  for (double y : {0.5, 3.0}) {
    const std::function<Quaternion(Quaternion)> image = [&](const Quaternion& q) {
      return dual_transform_quadrature(f_eval, y, f.alpha, rule, q);
    };
    for (double m : {0.2, 0.4, 0.6}) {
      for (int k = 0; k < 8; ++k) {
        const double phase = (k + 0.5) * pi / 4.0;
        const Quaternion q = detail::on_slice(m, phase, quat_i);
        worst = std::max(worst, abs(slice_derivative(image, q, h)));
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max |d-bar S f| on the ball grid, h = 1e-4";
  return r;
}

// ---------------------------------------------------------------------------
// Suite driver.

inline std::vector<CheckResult> run_verify_checks(const VerifyOptions& opts = {}) {
  std::vector<CheckResult> all;
  const auto want = [&](const char* name) {
    return opts.filter.empty() ||
           std::string(name).find(opts.filter) != std::string::npos;
  };
  if (want("01_hille_hardy")) all.push_back(check_hille_hardy());
  if (want("02_eigen_relation")) all.push_back(check_eigen_relation());
  if (want("03_disk_moments")) all.push_back(check_disk_moments());
  if (want("03_parseval_norm")) all.push_back(check_parseval_norm(opts.seed));
  if (want("04_reproducing_property")) all.push_back(check_reproducing_property());
  if (want("05_equal_weight_diagonal")) all.push_back(check_equal_weight_diagonal());
  if (want("05_kernel_reproduction")) all.push_back(check_kernel_reproduction());
  if (want("06_svd_cross_check")) all.push_back(check_svd_cross());
  if (want("07_duality_coeff")) all.push_back(check_duality_coeff(opts.seed));
  if (want("07_duality_quadrature"))
    all.push_back(check_duality_quadrature(opts.seed));
  if (want("08_semigroup")) all.push_back(check_semigroup(opts.seed));
  if (want("09_decay_slope_origin")) all.push_back(check_decay_origin());
  if (want("09_decay_slope_offaxis")) all.push_back(check_decay_offaxis());
  if (want("10_schatten_tail")) all.push_back(check_schatten_tail());
  if (want("10_schatten_divergence")) all.push_back(check_schatten_divergence());
  if (want("11_null_space")) all.push_back(check_null_space(opts.seed));
  if (want("12_bargmann_proportionality")) all.push_back(check_bargmann(opts.seed));
  if (want("13_polar_factorization")) all.push_back(check_polar(opts.seed));
  if (want("14_slice_regularity")) all.push_back(check_slice_regularity(opts.seed));

  if (opts.tol_override > 0.0) {
    for (CheckResult& c : all) {
      c.tolerance = opts.tol_override;
      c.pass = c.measured <= c.tolerance;
    }
  }
  return all;  // construction order is already name order
}

}  // namespace fhankel
