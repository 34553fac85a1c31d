#pragma once

// Branch-aware elementary and classical special functions: principal
// logarithm, dilogarithm, log-Gamma, Bernoulli numbers, the kernel
// B(t) = 1/(e^{2 pi t}-1) - 1/(2 pi t) + 1/2 and the cotangent kernel
// (cot(t/2) - 2/t)/t.
//
// Everything here is pure and deterministic; domain violations raise
// qmod::domain_error (or a subclass).

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "qmod/errors.hpp"

namespace qmod {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi_sq_6 = 1.6449340668482264365;   // pi^2 / 6
inline constexpr double half_log_two_pi = 0.91893853320467274178;  // log sqrt(2 pi)
inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();
inline constexpr Complex imag_unit{0.0, 1.0};

namespace special {

// Principal logarithm with the convention Im in (-pi, pi].
inline Complex principal_log(Complex z) {
  if (z == Complex{0.0, 0.0}) throw domain_error("principal_log: argument is zero");
  Complex w = std::log(z);
  if (w.imag() == -pi) w = Complex(w.real(), pi);  // -0.0 imaginary inputs
  return w;
}

namespace detail {

// exp(z) - 1 without cancellation for small |z|.
inline Complex expm1c(Complex z) {
  const double a = z.real(), b = z.imag();
  const double s = std::sin(0.5 * b);
  return Complex(std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b));
}

// cot(v) through e^{+-2iv}, picking the side whose exponential stays bounded.
inline Complex cot(Complex v) {
  if (v.imag() >= 0.0) {
    const Complex w = std::exp(2.0 * imag_unit * v);  // |w| <= 1
    return imag_unit * (w + 1.0) / (w - 1.0);
  }
  const Complex w = std::exp(-2.0 * imag_unit * v);   // |w| < 1
  return imag_unit * (1.0 + w) / (1.0 - w);
}

}  // namespace detail

// Exact Bernoulli numbers B_2 .. B_60 rounded to double. The recursion in
// floating point loses accuracy past index ~30, hence the frozen table.
inline double bernoulli(int k) {
  static constexpr double table[30] = {
      1.66666666666666657e-01,   // B_2  = 1/6
      -3.33333333333333329e-02,  // B_4  = -1/30
      2.38095238095238082e-02,   // B_6  = 1/42
      -3.33333333333333329e-02,  // B_8  = -1/30
      7.57575757575757597e-02,   // B_10 = 5/66
      -2.53113553113553102e-01,  // B_12 = -691/2730
      1.16666666666666674e+00,   // B_14 = 7/6
      -7.09215686274509771e+00,  // B_16 = -3617/510
      5.49711779448621556e+01,   // B_18 = 43867/798
      -5.29124242424242425e+02,  // B_20 = -174611/330
      6.19212318840579701e+03,   // B_22 = 854513/138
      -8.65802531135531171e+04,  // B_24 = -236364091/2730
      1.42551716666666674e+06,   // B_26 = 8553103/6
      -2.72982310678160936e+07,  // B_28 = -23749461029/870
      6.01580873900642395e+08,   // B_30 = 8615841276005/14322
      -1.51163157670921574e+10,  // B_32 = -7709321041217/510
      4.29614643061166687e+11,   // B_34 = 2577687858367/6
      -1.37116552050883320e+13,  // B_36
      4.88332318973593188e+14,   // B_38 = 2929993913841559/6
      -1.92965793419400680e+16,  // B_40
      8.41693047573682560e+17,   // B_42
      -4.03380718540594545e+19,  // B_44
      2.11507486380819926e+21,   // B_46
      -1.20866265222965262e+23,  // B_48
      7.50086674607696417e+24,   // B_50
      -5.03877810148106885e+26,  // B_52
      3.65287764848181223e+28,   // B_54
      -2.84987693024508824e+30,  // B_56
      2.38654274996836274e+32,   // B_58
      -2.13999492572253349e+34,  // B_60
  };
  if (k < 2 || k > 60 || (k % 2) != 0)
    throw domain_error("bernoulli: index must be even and within [2, 60]");
  return table[k / 2 - 1];
}

namespace detail {

// Defining series sum_{n>=1} z^n / n^2, adequate through |z| <~ 0.75.
inline Complex li2_series(Complex z) {
  Complex term = z, sum = z;
  for (int n = 2; n < 512; ++n) {
    term *= z;
    const Complex add = term / double(n * n);
    sum += add;
    if (std::abs(add) <= 0.25 * machine_eps * std::abs(sum)) return sum;
  }
  throw accuracy_error("li2: series did not converge");
}

// Expansion about the unit circle. With u = -log w,
//   Li2(e^{-u}) = pi^2/6 + u (log u - 1) - u^2/4
//                 + sum_{k>=1} B_{2k} u^{2k+1} / ((2k+1) (2k) (2k)!),
// convergent for |u| < 2 pi.
inline Complex li2_log_expansion(Complex w) {
  const Complex u = -principal_log(w);
  Complex sum = pi_sq_6 + u * (principal_log(u) - 1.0) - 0.25 * u * u;
  const Complex u2 = u * u;
  Complex upow = u * u2;  // u^{2k+1}
  double fact = 2.0;      // (2k)!
  for (int k = 1; k <= 30; ++k) {
    if (k > 1) fact *= (2.0 * k) * (2.0 * k - 1.0);
    const Complex term = bernoulli(2 * k) * upow / ((2.0 * k + 1.0) * (2.0 * k) * fact);
    sum += term;
    if (std::abs(term) <= 0.25 * machine_eps * std::abs(sum)) break;
    upow *= u2;
  }
  return sum;
}

}  // namespace detail

// Dilogarithm Li2(z) = sum_{n>=1} z^n/n^2, continued off the disk by the
// inversion, reflection and z -> z/(z-1) functional equations. The cut
// [1, inf) is rejected rather than resolved by one-sided continuity.
inline Complex li2(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw domain_error("li2: argument lies on the branch cut [1, inf)");
  const double az = std::abs(z);
  if (az <= 0.5) return detail::li2_series(z);
  if (az > 1.0) {
    // Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
    const Complex lg = principal_log(-z);
    return -pi_sq_6 - 0.5 * lg * lg - li2(1.0 / z);
  }
  if (z.real() > 0.5) {
    // Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
    return pi_sq_6 - principal_log(z) * principal_log(1.0 - z) - li2(1.0 - z);
  }
  if (az <= 0.75) return detail::li2_series(z);
  const Complex mapped = z / (z - 1.0);  // keeps real arguments real
  if (std::abs(mapped) <= 0.7) {
    // Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2
    const Complex lg = principal_log(1.0 - z);
    return -detail::li2_series(mapped) - 0.5 * lg * lg;
  }
  return detail::li2_log_expansion(z);
}

// log Gamma(z), principal determination: the branch that is real on the
// positive axis and continuous on the plane cut along (-inf, 0]. Computed by
// the downward recurrence log Gamma(z) = log Gamma(z+n) - sum log(z+k)
// into the Stirling region Re >= 12.
inline Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw pole_error("log_gamma: pole at a non-positive integer");
  Complex shift{0.0, 0.0};
  Complex w = z;
  while (w.real() < 12.0) {
    shift += principal_log(w);
    w += 1.0;
  }
  const Complex lw = principal_log(w);
  Complex res = (w - 0.5) * lw - w + half_log_two_pi;
  const Complex w2 = w * w;
  Complex wpow = w;  // w^{2k-1}
  for (int k = 1; k <= 9; ++k) {
    res += bernoulli(2 * k) / ((2.0 * k) * (2.0 * k - 1.0) * wpow);
    wpow *= w2;
  }
  return res - shift;
}

// B(t) = 1/(e^{2 pi t} - 1) - 1/(2 pi t) + 1/2. Odd, removable at t = 0,
// poles at t = i k for nonzero integer k. Below |2 pi t| = 1/4 the odd
// Taylor series sum_k B_{2k} (2 pi t)^{2k-1}/(2k)! (15 terms) is used; the
// alternating tail at the switch radius is below 1e-16.
inline Complex stieltjes_b(Complex t) {
  const Complex u = two_pi * t;
  if (std::abs(u) < 0.25) {
    Complex sum{0.0, 0.0};
    const Complex u2 = u * u;
    Complex upow = u;   // u^{2k-1}
    double fact = 2.0;  // (2k)!
    for (int k = 1; k <= 15; ++k) {
      if (k > 1) fact *= (2.0 * k) * (2.0 * k - 1.0);
      sum += bernoulli(2 * k) * upow / fact;
      upow *= u2;
    }
    return sum;
  }
  if (std::abs(t.real()) < 1e-12) {
    const double k = std::round(t.imag());
    if (k != 0.0 && std::abs(t.imag() - k) < 1e-12)
      throw pole_error("stieltjes_b: pole at t = i k");
  }
  return 1.0 / detail::expm1c(u) - 1.0 / u + 0.5;
}

// (cot(t/2) - 2/t)/t = sum_{k>=1} (-1)^k 2 B_{2k} t^{2k-2}/(2k)!
//   = -1/6 - t^2/360 - t^4/15120 - ...
// Removable at t = 0, poles at t = 2 pi k for nonzero integer k. The sign of
// t is canonicalized first, making the even symmetry exact.
inline Complex cot_kernel(Complex t) {
  if (t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0)) t = -t;
  if (std::abs(t) < 0.5) {
    Complex sum{0.0, 0.0};
    const Complex t2 = t * t;
    Complex tpow{1.0, 0.0};  // t^{2k-2}
    double fact = 2.0;       // (2k)!
    double sign = -1.0;
    for (int k = 1; k <= 15; ++k) {
      if (k > 1) fact *= (2.0 * k) * (2.0 * k - 1.0);
      sum += sign * 2.0 * bernoulli(2 * k) * tpow / fact;
      tpow *= t2;
      sign = -sign;
    }
    return sum;
  }
  if (std::abs(t.imag()) < 1e-9) {
    const double k = std::round(t.real() / two_pi);
    if (k != 0.0 && std::abs(t.real() - two_pi * k) < 1e-9 && std::abs(t.imag()) < 1e-9)
      throw pole_error("cot_kernel: pole at t = 2 pi k");
  }
  return (detail::cot(0.5 * t) - 2.0 / t) / t;
}

}  // namespace special
}  // namespace qmod
