#pragma once

// Quaternion arithmetic and the slice decomposition q = u + I v that the
// rest of the library is built on.  Every quaternion lies on a complex
// "slice" C_I = span{1, I} for some unit imaginary axis I, and all power
// series with real coefficients restrict to ordinary complex power series
// on each slice.  That observation is used heavily: kernels and transforms
// are evaluated with complex arithmetic on the slice of their argument and
// embedded back, which is both cheaper and better conditioned than working
// with full quaternion products term by term.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace fhankel {

struct Quaternion {
  double w = 0.0;  // real part
  double x = 0.0;  // i component
  double y = 0.0;  // j component
  double z = 0.0;  // k component

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  // Real embedding.
  constexpr explicit Quaternion(double w_) : w(w_) {}

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
};

inline constexpr Quaternion quat_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion quat_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion quat_k{0.0, 0.0, 0.0, 1.0};

inline constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

inline constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

// Hamilton product; non-commutative.
inline constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

inline constexpr Quaternion operator*(const Quaternion& q, double s) {
  return s * q;
}

inline constexpr Quaternion& operator+=(Quaternion& a, const Quaternion& b) {
  a = a + b;
  return a;
}

inline constexpr Quaternion& operator-=(Quaternion& a, const Quaternion& b) {
  a = a - b;
  return a;
}

inline constexpr Quaternion conj(const Quaternion& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

inline constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline constexpr Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  return {q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2};
}

inline constexpr Quaternion operator/(const Quaternion& a, const Quaternion& b) {
  return a * inverse(b);
}

inline constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.w / s, q.x / s, q.y / s, q.z / s};
}

// Integer power by repeated multiplication.  Exponents used in this library
// stay small enough that the simple loop is fine and keeps rounding behaviour
// identical to the incremental products used inside series evaluations.
inline Quaternion pow(const Quaternion& q, int n) {
  if (n < 0) return pow(inverse(q), -n);
  Quaternion r{1.0};
  for (int i = 0; i < n; ++i) r = r * q;
  return r;
}

// Ordered star power p^k q^k.  Because p and q need not commute this is in
// general different from (p q)^k; the distinction is what the star product
// in the kernel series is about.
inline Quaternion star_power_pair(const Quaternion& p, const Quaternion& q, int k) {
  if (k < 0) throw std::invalid_argument("star_power_pair: negative exponent");
  return pow(p, k) * pow(q, k);
}

// -------------------------------------------------------------------------
// Slice decomposition.

// q = u + I v with v >= 0 and I a unit imaginary quaternion.  For real q the
// imaginary part does not determine an axis; the canonical choice is I = i,
// which keeps the map q -> (u, v, I) total and deterministic.
struct SlicePoint {
  double u = 0.0;               // real part
  double v = 0.0;               // imaginary magnitude, >= 0
  Quaternion axis = quat_i;     // unit imaginary axis I

  std::complex<double> complex_value() const { return {u, v}; }
};

inline SlicePoint slice_decompose(const Quaternion& q) {
  const double v = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  SlicePoint s;
  s.u = q.w;
  s.v = v;
  if (v > 0.0) {
    s.axis = Quaternion{0.0, q.x / v, q.y / v, q.z / v};
  }
  return s;
}

inline Quaternion slice_recompose(const SlicePoint& s) {
  return Quaternion{s.u} + s.axis * s.v;
}

// Embed a complex number computed on the slice with axis I back into H.
inline Quaternion embed(const Quaternion& axis, const std::complex<double>& c) {
  return Quaternion{c.real()} + axis * c.imag();
}

// Unit slice axis of q (canonical i for real q).
inline Quaternion slice_axis(const Quaternion& q) {
  return slice_decompose(q).axis;
}

inline bool same_slice(const Quaternion& p, const Quaternion& q,
                       double tol = 1e-12) {
  const SlicePoint sp = slice_decompose(p);
  const SlicePoint sq = slice_decompose(q);
  if (sp.v <= tol || sq.v <= tol) return true;  // real points lie on every slice
  // A slice is the whole plane R + I R, so I and -I span the same slice;
  // decomposition canonicalizes to v >= 0 and may flip the stored axis.
  const double direct = std::sqrt(norm_sq(sp.axis - sq.axis));
  const double flipped = std::sqrt(norm_sq(sp.axis + sq.axis));
  return std::min(direct, flipped) <= tol;
}

// -------------------------------------------------------------------------
// Power series with right coefficients: f(q) = sum_n q^n c_n, evaluated by
// the nested form c_0 + q (c_1 + q (c_2 + ...)).  Coefficients multiply from
// the right so that the series is a right-linear function of them, matching
// the module convention that scalars act on basis elements from the right.

inline Quaternion eval_power_series(const std::vector<Quaternion>& coeffs,
                                    const Quaternion& q,
                                    double overflow_threshold = 1e120) {
  if (coeffs.empty()) return Quaternion{};
  Quaternion acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = coeffs[i] + q * acc;
    if (!(norm_sq(acc) < overflow_threshold * overflow_threshold)) {
      throw std::overflow_error(
          "eval_power_series: partial sums exceed overflow threshold");
    }
  }
  return acc;
}

// Same series with real coefficients, evaluated through the slice of q.
inline Quaternion eval_power_series(const std::vector<double>& coeffs,
                                    const Quaternion& q,
                                    double overflow_threshold = 1e120) {
  if (coeffs.empty()) return Quaternion{};
  const SlicePoint s = slice_decompose(q);
  const std::complex<double> zq = s.complex_value();
  std::complex<double> acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = coeffs[i] + zq * acc;
    if (!(std::norm(acc) < overflow_threshold * overflow_threshold)) {
      throw std::overflow_error(
          "eval_power_series: partial sums exceed overflow threshold");
    }
  }
  return embed(s.axis, acc);
}

}  // namespace fhankel
