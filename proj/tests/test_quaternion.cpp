#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "fhankel/quaternion.hpp"

using namespace fhankel;

namespace {
bool near(const Quaternion& a, const Quaternion& b, double tol = 1e-14) {
  return abs(a - b) <= tol;
}
}  // namespace

TEST_CASE("quaternion units satisfy the multiplication table", "[quaternion]") {
  const Quaternion minus_one{-1.0};
  CHECK(near(quat_i * quat_i, minus_one));
  CHECK(near(quat_j * quat_j, minus_one));
  CHECK(near(quat_k * quat_k, minus_one));
  CHECK(near(quat_i * quat_j, quat_k));
  CHECK(near(quat_j * quat_i, -quat_k));
  CHECK(near(quat_j * quat_k, quat_i));
  CHECK(near(quat_k * quat_j, -quat_i));
  CHECK(near(quat_k * quat_i, quat_j));
  CHECK(near(quat_i * quat_k, -quat_j));
  CHECK(near(quat_i * quat_j * quat_k, minus_one));
}

TEST_CASE("quaternion product expands correctly", "[quaternion]") {
  // (1 + 2i + 3j + 4k)(5 + 6i + 7j + 8k):
  //   w = 5 - 12 - 21 - 32          = -60
  //   x = 6 + 10 + 24 - 28          =  12
  //   y = 7 - 16 + 15 + 24          =  30
  //   z = 8 + 14 - 18 + 20          =  24
  const Quaternion a{1.0, 2.0, 3.0, 4.0};
  const Quaternion b{5.0, 6.0, 7.0, 8.0};
  CHECK(near(a * b, Quaternion{-60.0, 12.0, 30.0, 24.0}));
  CHECK_FALSE(near(a * b, b * a));  // noncommutative
}

TEST_CASE("conjugation and norm are multiplicative", "[quaternion]") {
  const Quaternion a{0.3, -1.2, 0.7, 2.0};
  const Quaternion b{-0.5, 0.1, 1.4, -0.9};
  CHECK(near(conj(a * b), conj(b) * conj(a)));
  CHECK(std::fabs(abs(a * b) - abs(a) * abs(b)) < 1e-14);
  // q conj(q) is the squared norm as a real quaternion
  CHECK(near(a * conj(a), Quaternion{norm_sq(a)}));
}

TEST_CASE("inverse and division", "[quaternion]") {
  const Quaternion a{1.5, -0.2, 0.8, 0.4};
  const Quaternion b{0.3, 2.0, -1.0, 0.5};
  CHECK(near(a * inverse(a), Quaternion{1.0}));
  CHECK(near(inverse(a) * a, Quaternion{1.0}));
  CHECK(near((a / b) * b, a, 1e-13));
  CHECK(near(a / 2.0, Quaternion{0.75, -0.1, 0.4, 0.2}));
}

TEST_CASE("integer powers", "[quaternion]") {
  const Quaternion q{0.4, 0.3, -0.2, 0.1};
  CHECK(near(pow(q, 0), Quaternion{1.0}));
  CHECK(near(pow(q, 1), q));
  CHECK(near(pow(q, 5), q * q * q * q * q));
  CHECK(near(pow(q, -2), inverse(q) * inverse(q)));
}

TEST_CASE("ordered power pairs", "[quaternion]") {
  const Quaternion p{0.2, 0.5, 0.0, 0.0};
  const Quaternion q{0.1, 0.0, 0.4, 0.0};
  CHECK(near(star_power_pair(p, q, 0), Quaternion{1.0}));
  CHECK(near(star_power_pair(p, q, 3), pow(p, 3) * pow(q, 3)));
  // p and q live on different slices, so the ordered product differs from
  // any rearranged one.
  CHECK_FALSE(near(star_power_pair(p, q, 2), pow(q, 2) * pow(p, 2)));
  CHECK_THROWS_AS(star_power_pair(p, q, -1), std::invalid_argument);
}

TEST_CASE("slice decomposition round-trips", "[quaternion][slice]") {
  const Quaternion q{0.7, 0.3, -0.4, 1.1};
  const SlicePoint s = slice_decompose(q);
  CHECK(s.v >= 0.0);
  CHECK(std::fabs(norm_sq(s.axis) - 1.0) < 1e-14);
  CHECK(std::fabs(s.axis.w) < 1e-15);  // axis is purely imaginary
  CHECK(near(slice_recompose(s), q));
  CHECK(near(embed(s.axis, s.complex_value()), q));

  // Real points decompose with v = 0 and the canonical axis.
  const SlicePoint r = slice_decompose(Quaternion{2.5});
  CHECK(r.v == 0.0);
  CHECK(r.u == 2.5);
  CHECK(near(r.axis, quat_i));
}

TEST_CASE("slice membership", "[quaternion][slice]") {
  const Quaternion p = embed(quat_j, {0.3, 0.8});
  const Quaternion q = embed(quat_j, {-1.0, 0.2});
  CHECK(same_slice(p, q));
  CHECK_FALSE(same_slice(p, embed(quat_k, {0.3, 0.8})));
  // Real points belong to every slice.
  CHECK(same_slice(Quaternion{1.5}, p));
  CHECK(same_slice(p, Quaternion{-0.5}));
}

TEST_CASE("power series evaluation with real coefficients", "[quaternion][series]") {
  // f(q) = 1 + 2q + 3q^2 evaluated on the j slice agrees with the complex
  // evaluation pushed through the embedding.
  const std::vector<double> coeffs = {1.0, 2.0, 3.0};
  const std::complex<double> z{0.4, 0.7};
  const Quaternion q = embed(quat_j, z);
  const std::complex<double> want = 1.0 + 2.0 * z + 3.0 * z * z;
  CHECK(near(eval_power_series(coeffs, q), embed(quat_j, want)));
}

TEST_CASE("power series evaluation with quaternion coefficients", "[quaternion][series]") {
  // Right coefficients: f(q) = c0 + q c1 + q^2 c2.
  const std::vector<Quaternion> coeffs = {Quaternion{1.0, 0.0, 1.0, 0.0},
                                          Quaternion{0.0, 0.5, 0.0, -1.0},
                                          Quaternion{2.0}};
  const Quaternion q{0.3, 0.2, -0.1, 0.4};
  const Quaternion want = coeffs[0] + q * coeffs[1] + q * q * coeffs[2];
  CHECK(near(eval_power_series(coeffs, q), want));
}

TEST_CASE("power series evaluation guards against overflow", "[quaternion][series]") {
  const std::vector<Quaternion> coeffs(12, Quaternion{1.0});
  const Quaternion huge{1e30};
  CHECK_THROWS_AS(eval_power_series(coeffs, huge), std::overflow_error);
}
