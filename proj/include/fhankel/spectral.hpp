#pragma once

// Spectral data of the transform: closed-form singular values
// s_n = sqrt(pi gamma_n) |phi_n^(alpha)(y)|, a small dense SVD for
// cross-checking discretized operator matrices, Schatten partial sums and
// tail diagnostics, power-law decay fits, a boundedness report, and the
// polar pieces S = U |S|.
//
// The closed sequence is exact up to rounding and serves as the oracle; the
// dense SVD is one-sided complex Jacobi, adequate for the <= 200 x 200
// matrices that appear here.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fhankel/matrix.hpp"
#include "fhankel/operators.hpp"
#include "fhankel/quadrature.hpp"
#include "fhankel/special.hpp"

namespace fhankel {

// ---------------------------------------------------------------------------
// Closed spectral sequences.

inline std::vector<double> singular_values_closed(double y, const Params& params,
                                                  int nmax) {
  const double pi = 3.14159265358979323846;
  const std::vector<double> p = phi_all(nmax, params.alpha, y);
  const std::vector<double> g = gamma_moment_all(nmax, params.beta, params.eta);
  std::vector<double> s(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    s[static_cast<std::size_t>(n)] =
        std::sqrt(pi * g[static_cast<std::size_t>(n)]) *
        std::fabs(p[static_cast<std::size_t>(n)]);
  }
  return s;
}

// c_n = pi gamma_n phi_n(y)^2 = s_n^2.
inline std::vector<double> c_n_sequence(double y, const Params& params,
                                        int nmax) {
  std::vector<double> c = singular_values_closed(y, params, nmax);
  for (double& v : c) v *= v;
  return c;
}

// ---------------------------------------------------------------------------
// One-sided complex Jacobi SVD.  A = U diag(sigma) V^*, sigma descending;
// zero singular values give zero columns in U.

struct Svd {
  Matrix u;
  std::vector<double> sigma;
  Matrix v;
};

inline Svd svd_small(const Matrix& a0, double tol = 1e-13) {
  const std::size_t m = a0.rows;
  const std::size_t n = a0.cols;
  if (m < n) throw std::invalid_argument("svd_small: needs rows >= cols");
  Matrix a = a0;
  Matrix v = Matrix::identity(n);

  const int max_sweeps = 60;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double hii = 0.0, hjj = 0.0;
        std::complex<double> hij = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          hii += std::norm(a.at(k, i));
          hjj += std::norm(a.at(k, j));
          hij += std::conj(a.at(k, i)) * a.at(k, j);
        }
        const double b = std::abs(hij);
        if (b <= tol * std::sqrt(hii * hjj) || b == 0.0) continue;
        converged = false;
        const std::complex<double> phase = hij / b;
        const double tau = (hjj - hii) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const std::complex<double> sp = s * phase;
        const std::complex<double> spc = s * std::conj(phase);
        for (std::size_t k = 0; k < m; ++k) {
          const std::complex<double> ai = a.at(k, i);
          const std::complex<double> aj = a.at(k, j);
          a.at(k, i) = c * ai - spc * aj;
          a.at(k, j) = sp * ai + c * aj;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> vi = v.at(k, i);
          const std::complex<double> vj = v.at(k, j);
          v.at(k, i) = c * vi - spc * vj;
          v.at(k, j) = sp * vi + c * vj;
        }
      }
    }
  }
  if (!converged) {
    throw std::runtime_error("svd_small: Jacobi sweeps did not converge");
  }

  std::vector<double> sigma(n);
  double smax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s2 = 0.0;
    for (std::size_t k = 0; k < m; ++k) s2 += std::norm(a.at(k, j));
    sigma[j] = std::sqrt(s2);
    smax = std::max(smax, sigma[j]);
  }

  // Descending stable order (equal values keep their column order).
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t p, std::size_t q) { return sigma[p] > sigma[q]; });

  Svd out;
  out.u = Matrix(m, n);
  out.v = Matrix(n, n);
  out.sigma.resize(n);
  for (std::size_t jn = 0; jn < n; ++jn) {
    const std::size_t jo = idx[jn];
    out.sigma[jn] = sigma[jo];
    const bool null_col = !(sigma[jo] > tol * smax) || sigma[jo] == 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      out.u.at(k, jn) = null_col ? 0.0 : a.at(k, jo) / sigma[jo];
    }
    for (std::size_t k = 0; k < n; ++k) out.v.at(k, jn) = v.at(k, jo);
  }
  return out;
}

inline double svd_residual(const Matrix& a, const Svd& f) {
  Matrix us(f.u.rows, f.sigma.size());
  for (std::size_t k = 0; k < f.u.rows; ++k) {
    for (std::size_t j = 0; j < f.sigma.size(); ++j) {
      us.at(k, j) = f.u.at(k, j) * f.sigma[j];
    }
  }
  return max_abs_diff(a, matmul(us, adjoint(f.v)));
}

// Eigenvalues of a Hermitian matrix by two-sided complex Jacobi; used for
// positive-semidefiniteness checks of kernel Gram matrices.
inline std::vector<double> hermitian_eigenvalues(const Matrix& h0,
                                                 double tol = 1e-14) {
  if (h0.rows != h0.cols) {
    throw std::invalid_argument("hermitian_eigenvalues: square matrix required");
  }
  const std::size_t n = h0.rows;
  Matrix h = h0;
  double scale = 0.0;
  for (const auto& v : h.a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(h.at(i, j)));
    }
    if (off <= tol * scale) break;
    if (sweep == max_sweeps - 1) {
      throw std::runtime_error("hermitian_eigenvalues: did not converge");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::complex<double> hij = h.at(i, j);
        const double b = std::abs(hij);
        if (b <= tol * scale) continue;
        const std::complex<double> phase = hij / b;
        const double tau = (h.at(j, j).real() - h.at(i, i).real()) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const std::complex<double> sp = s * phase;
        const std::complex<double> spc = s * std::conj(phase);
        // Columns: H <- H G.
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> hi = h.at(k, i);
          const std::complex<double> hj = h.at(k, j);
          h.at(k, i) = c * hi - spc * hj;
          h.at(k, j) = sp * hi + c * hj;
        }
        // Rows: H <- G^* H.
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> hi = h.at(i, k);
          const std::complex<double> hj = h.at(j, k);
          h.at(i, k) = c * hi - sp * hj;
          h.at(j, k) = spc * hi + c * hj;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = h.at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

// ---------------------------------------------------------------------------
// Schatten diagnostics.

struct SchattenReport {
  double p = 0.0;
  int nmax = 0;
  double threshold = 0.0;      // analytic critical exponent, if meaningful
  bool threshold_valid = false;
  std::vector<double> partial_sums;  // at n = 64, 128, 256, ..., nmax
  std::vector<int> partial_at;
  double tail_mean = 0.0;      // (S_N - S_{N/2}) / (N/2)
  bool tail_converged = false; // tail_mean < 1e-3
  double block_slope = 0.0;    // LSQ slope of log2(dyadic block sums)
  bool blocks_nondecaying = false;  // block_slope > -0.05
};

inline SchattenReport schatten_report(double y, const Params& params, double p,
                                      int nmax = 5000) {
  if (!(p >= 1.0)) throw std::domain_error("schatten_report: requires p >= 1");
  if (nmax < 256) throw std::invalid_argument("schatten_report: nmax too small");
  SchattenReport rep;
  rep.p = p;
  rep.nmax = nmax;
  if (y > 0.0) {
    rep.threshold = 4.0 / (1.0 + 2.0 * params.eta);
    rep.threshold_valid = true;
  } else if (params.eta > params.alpha) {
    rep.threshold = 2.0 / (params.eta - params.alpha);
    rep.threshold_valid = true;
  }

  const std::vector<double> s = singular_values_closed(y, params, nmax);
  std::vector<double> cum(s.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    acc += std::pow(s[n], p);
    cum[n] = acc;
  }
  for (int n = 64; n < nmax; n *= 2) {
    rep.partial_at.push_back(n);
    rep.partial_sums.push_back(cum[static_cast<std::size_t>(n)]);
  }
  rep.partial_at.push_back(nmax);
  rep.partial_sums.push_back(cum[static_cast<std::size_t>(nmax)]);

  const int half = nmax / 2;
  rep.tail_mean = (cum[static_cast<std::size_t>(nmax)] -
                   cum[static_cast<std::size_t>(half)]) /
                  (nmax - half);
  rep.tail_converged = rep.tail_mean < 1e-3;

  // Dyadic blocks [2^j, 2^{j+1}) from j = 6 up to the largest full block.
  std::vector<double> xs, ys;
  for (int j = 6; (1 << (j + 1)) <= nmax; ++j) {
    const double bj = cum[static_cast<std::size_t>((1 << (j + 1)) - 1)] -
                      cum[static_cast<std::size_t>((1 << j) - 1)];
    xs.push_back(static_cast<double>(j));
    ys.push_back(std::log2(std::max(bj, 1e-300)));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  rep.block_slope = sxy / sxx;
  rep.blocks_nondecaying = rep.block_slope > -0.05;
  return rep;
}

// ---------------------------------------------------------------------------
// Power-law decay fit of c_n on [n_lo, n_hi].  For y > 0 the sequence
// oscillates under its envelope, so the fit runs over means of consecutive
// windows (25 wide); at y = 0 the sequence is smooth and the raw points are
// fitted directly.

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
};

inline DecayFit decay_fit(double y, const Params& params, int n_lo, int n_hi) {
  if (!(100 <= n_lo && n_lo < n_hi && n_hi <= 5000)) {
    throw std::invalid_argument("decay_fit: range must sit inside [100, 5000]");
  }
  const std::vector<double> c = c_n_sequence(y, params, n_hi);
  std::vector<double> xs, ys;
  if (y > 0.0) {
    const int w = 25;
    for (int start = n_lo; start + w <= n_hi + 1; start += w) {
      double mean = 0.0;
      for (int n = start; n < start + w; ++n) mean += c[static_cast<std::size_t>(n)];
      mean /= w;
      xs.push_back(std::log(start + 0.5 * (w - 1)));
      ys.push_back(std::log(mean));
    }
  } else {
    for (int n = n_lo; n <= n_hi; ++n) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(c[static_cast<std::size_t>(n)]));
    }
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

// ---------------------------------------------------------------------------
// Boundedness diagnostics: sup of c_n over a long stretch (with a growth
// flag), and the kernel-diagonal integral
//   ell = pi * int_0^1 R_t(y,y) t^{beta-1} (1-t)^{eta-1} dt
// evaluated with Gauss rules of increasing size.  The integrand is computed
// in the exponent-merged form (1-t)^{-(alpha+1)} e^{2 y sqrt(t)/(1+sqrt(t))}
// ghat_alpha(t y^2/(1-t)^2), which stays polynomially bounded.  ell is
// finite iff the boundary exponent eta - alpha - 2 integrates, and the
// stalling-vs-marching behaviour of the rule sequence is what the divergence
// flag reports: ratio of successive differences >= 0.95 means the values
// keep marching (divergent); tiny last difference means converged.

struct BoundednessReport {
  double sup_c = 0.0;
  int argmax = 0;
  bool sup_growing = false;      // sup over (N/2, N] exceeds sup over [0, N/2]
  std::vector<int> ell_sizes;
  std::vector<double> ell_values;
  double ell_ratio = 0.0;
  bool ell_divergent = false;
};

inline BoundednessReport boundedness_report(double y, const Params& params,
                                            int nmax = 4096) {
  BoundednessReport rep;
  const std::vector<double> c = c_n_sequence(y, params, nmax);
  double lo = 0.0, hi = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const double v = c[static_cast<std::size_t>(n)];
    if (v > rep.sup_c) {
      rep.sup_c = v;
      rep.argmax = n;
    }
    if (n <= nmax / 2) {
      lo = std::max(lo, v);
    } else {
      hi = std::max(hi, v);
    }
  }
  rep.sup_growing = hi > lo;

  const double pi = 3.14159265358979323846;
  rep.ell_sizes = {64, 128, 256};
  for (int m : rep.ell_sizes) {
    const QuadratureRule rule = gauss_jacobi_unit(m, params.beta, params.eta);
    double v = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = rule.nodes[i];
      const double rt = std::sqrt(t);
      const double w = t * y * y / ((1.0 - t) * (1.0 - t));
      const double diag = std::pow(1.0 - t, -(params.alpha + 1.0)) *
                          std::exp(2.0 * y * rt / (1.0 + rt)) *
                          bessel_i_scaled_exp(params.alpha, w);
      v += rule.weights[i] * diag;
    }
    rep.ell_values.push_back(pi * v);
  }
  const double d1 = rep.ell_values[1] - rep.ell_values[0];
  const double d2 = rep.ell_values[2] - rep.ell_values[1];
  if (std::fabs(d2) <= 1e-12 * std::fabs(rep.ell_values[2])) {
    rep.ell_ratio = 0.0;
    rep.ell_divergent = false;
  } else {
    rep.ell_ratio = d2 / d1;
    rep.ell_divergent = rep.ell_ratio >= 0.95;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Polar pieces.  The partial isometry sends phi_n a_n to
// e_n sign(phi_n(y)) a_n / sqrt(pi gamma_n) and kills the null indices.

inline MonomialCoeffs partial_isometry_apply(const LaguerreCoeffs& f, double y,
                                             const Params& params,
                                             double null_tol = 1e-9) {
  const double pi = 3.14159265358979323846;
  MonomialCoeffs out;
  if (f.a.empty()) return out;
  const int nmax = static_cast<int>(f.a.size()) - 1;
  const std::vector<double> p = phi_all(nmax, params.alpha, y);
  const std::vector<double> g = gamma_moment_all(nmax, params.beta, params.eta);
  const std::vector<int> null_idx =
      null_space_indices(y, params.alpha, nmax, null_tol);
  out.c.resize(f.a.size());
  std::size_t k = 0;
  for (int n = 0; n <= nmax; ++n) {
    if (k < null_idx.size() && null_idx[k] == n) {
      ++k;
      out.c[static_cast<std::size_t>(n)] = Quaternion{};
      continue;
    }
    const double sgn = p[static_cast<std::size_t>(n)] >= 0.0 ? 1.0 : -1.0;
    out.c[static_cast<std::size_t>(n)] =
        (sgn / std::sqrt(pi * g[static_cast<std::size_t>(n)])) *
        f.a[static_cast<std::size_t>(n)];
  }
  return out;
}

// S = U |S| in the diagonal coordinates, together with U^*U projection
// defects.  zero_columns lists the null indices of U.
struct PolarCheck {
  double factorization_residual = 0.0;  // max |S_nn - u_n |S|_nn|
  double projection_residual = 0.0;     // max |(U^*U)^2 - U^*U| + self-adjointness
  std::vector<int> zero_columns;
};

inline PolarCheck svd_factorization_check(double y, const Params& params, int n,
                                          double null_tol = 1e-9) {
  const double pi = 3.14159265358979323846;
  PolarCheck out;
  const std::vector<double> p = phi_all(n - 1, params.alpha, y);
  const std::vector<double> g = gamma_moment_all(n - 1, params.beta, params.eta);
  out.zero_columns = null_space_indices(y, params.alpha, n - 1, null_tol);
  std::size_t k = 0;
  for (int m = 0; m < n; ++m) {
    const double s_signed = std::sqrt(pi * g[static_cast<std::size_t>(m)]) *
                            p[static_cast<std::size_t>(m)];
    double u = p[static_cast<std::size_t>(m)] >= 0.0 ? 1.0 : -1.0;
    if (k < out.zero_columns.size() && out.zero_columns[k] == m) {
      ++k;
      u = 0.0;
    }
    const double resid = std::fabs(s_signed - u * std::fabs(s_signed));
    out.factorization_residual = std::max(out.factorization_residual, resid);
    // U^*U is diagonal with entries u^2 in {0, 1}: idempotency defect
    // |u^4 - u^2|, self-adjointness exact by construction.
    out.projection_residual =
        std::max(out.projection_residual, std::fabs(u * u * u * u - u * u));
  }
  return out;
}

}  // namespace fhankel
