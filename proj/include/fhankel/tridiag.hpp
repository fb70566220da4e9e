#pragma once

// Symmetric tridiagonal eigensolver (implicit-shift QL) that tracks the
// first component of every eigenvector.  This is exactly the kernel of the
// Golub-Welsch construction of Gaussian quadrature rules: nodes are the
// eigenvalues of the Jacobi matrix of the weight's orthogonal polynomials,
// weights are mu_0 times the squared first eigenvector components.  Kept
// self-contained so the quadrature and spectral layers need no external
// linear algebra dependency.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fhankel {

// In-place: d holds the diagonal (length n), e the off-diagonal (length
// n-1; resized internally as workspace), z is rotated alongside.  To obtain
// first eigenvector components, pass z = (1, 0, ..., 0).  On return d holds
// eigenvalues sorted ascending and z the matching components.
inline void tridiag_eigen(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  if (static_cast<int>(z.size()) != n) {
    throw std::invalid_argument("tridiag_eigen: z size mismatch");
  }
  e.resize(n, 0.0);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) {
          throw std::runtime_error("tridiag_eigen: QL iteration did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Straight insertion sort by eigenvalue, permuting z alongside; the
  // matrices here are small enough that O(n^2) is irrelevant.
  for (int i = 1; i < n; ++i) {
    const double dv = d[i];
    const double zv = z[i];
    int j = i - 1;
    while (j >= 0 && d[j] > dv) {
      d[j + 1] = d[j];
      z[j + 1] = z[j];
      --j;
    }
    d[j + 1] = dv;
    z[j + 1] = zv;
  }
}

}  // namespace fhankel
