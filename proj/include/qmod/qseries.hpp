#pragma once

// q-product and q-series primitives: the infinite product (x;q)_inf, finite
// Pochhammer products, the Euler series, a log-of-product oracle, Lambert
// series, Dedekind eta and the Jacobi triple product.

#include <cmath>
#include <complex>

#include "qmod/errors.hpp"
#include "qmod/special.hpp"

namespace qmod::qseries {

struct SeriesTruncation {
  int terms_used = 0;
  double tail_bound = 0.0;  // absolute bound on the neglected tail
};

struct ProductResult {
  Complex value{0.0, 0.0};
  SeriesTruncation truncation;
};

namespace testing {
// Relative perturbation injected into pochhammer_inf, argument-dependent so
// that cross-point identities break. Used by the verification suite's
// independence (mutation) checks only; leave at zero otherwise.
inline double pochhammer_inf_perturbation = 0.0;
}  // namespace testing

// (x;q)_inf = prod_{n>=0} (1 - x q^n), |q| < 1. Truncates at the first n with
// |x| |q|^n below term_tolerance * |partial| and reports a geometric tail
// bound. Products needing more than 1e7 factors (|q| extremely close to 1)
// are refused; that regime belongs to the modular transform.
inline ProductResult pochhammer_inf(Complex x, Complex q,
                                    double term_tolerance = machine_eps) {
  const double qa = std::abs(q);
  if (qa >= 1.0) throw domain_error("pochhammer_inf: |q| must be < 1");

  Complex value{1.0, 0.0};
  Complex xq = x;  // x q^n
  int n = 0;
  for (;; ++n) {
    if (n > 10'000'000)
      throw accuracy_error(
          "pochhammer_inf: more than 1e7 factors required; evaluate through the modular "
          "transform instead",
          value, std::abs(xq));
    if (value == Complex{0.0, 0.0}) break;  // a factor vanished exactly
    if (std::abs(xq) < term_tolerance * std::abs(value)) break;
    value *= (1.0 - xq);
    xq *= q;
  }
  // |log tail| <= sum_{m>n} |x q^m| / (1 - |x q^m|), bounded geometrically.
  const double head = std::abs(xq);
  double tail = 0.0;
  if (value != Complex{0.0, 0.0} && head > 0.0)
    tail = 2.0 * std::abs(value) * head / std::max(1e-300, 1.0 - qa);

  if (testing::pochhammer_inf_perturbation != 0.0)
    value *= 1.0 + testing::pochhammer_inf_perturbation *
                       std::cos(std::abs(x) + 2.0 * std::abs(q));
  return {value, {n, tail}};
}

// (x;q)_n = prod_{k=0}^{n-1} (1 - x q^k).
inline Complex pochhammer_n(Complex x, Complex q, int n) {
  if (n < 0) throw domain_error("pochhammer_n: n must be non-negative");
  Complex value{1.0, 0.0};
  Complex xq = x;
  for (int k = 0; k < n; ++k) {
    value *= (1.0 - xq);
    xq *= q;
  }
  return value;
}

// sum_{n>=0} q^{n(n-1)/2} (-x)^n / (q;q)_n, which equals (x;q)_inf.
// Terms follow the recurrence t_n = t_{n-1} q^{n-1} (-x)/(1 - q^n); the sum
// stops after three consecutive terms below machine epsilon times the peak
// partial sum (guards against accidental small terms in oscillatory stages).
inline Complex euler_series(Complex x, Complex q) {
  if (std::abs(q) >= 1.0) throw domain_error("euler_series: |q| must be < 1");
  Complex sum{1.0, 0.0};
  Complex term{1.0, 0.0};
  Complex q_nm1{1.0, 0.0};  // q^{n-1}
  Complex q_n = q;          // q^n
  double peak = 1.0;
  int quiet = 0;
  for (int n = 1; n < 200000; ++n) {
    term *= q_nm1 * (-x) / (1.0 - q_n);
    sum += term;
    peak = std::max(peak, std::abs(sum));
    if (std::abs(term) < machine_eps * peak) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
    q_nm1 = q_n;
    q_n *= q;
  }
  throw accuracy_error("euler_series: series did not converge", sum, std::abs(term));
}

// Classical expansion log (x;q)_inf = -sum_{m>=1} x^m / (m (1 - q^m)),
// absolutely convergent for |x| < 1, |q| < 1. Serves as the independent
// high-accuracy oracle for the logarithm of the product.
inline Complex log_pochhammer_oracle(Complex x, Complex q) {
  const double xa = std::abs(x), qa = std::abs(q);
  if (xa >= 1.0) throw domain_error("log_pochhammer_oracle: |x| must be < 1");
  if (qa >= 1.0) throw domain_error("log_pochhammer_oracle: |q| must be < 1");
  if (x == Complex{0.0, 0.0}) return {0.0, 0.0};

  Complex sum{0.0, 0.0};
  Complex xm = x;  // x^m
  Complex qm = q;  // q^m
  double xa_m = xa;
  for (int m = 1; m < 2000000; ++m) {
    sum -= xm / (double(m) * (1.0 - qm));
    xm *= x;
    qm *= q;
    xa_m *= xa;
    const double tail = xa_m / (double(m + 1) * (1.0 - qa) * (1.0 - xa));
    if (tail < 1e-17 * std::max(1.0, std::abs(sum))) return sum;
  }
  throw accuracy_error("log_pochhammer_oracle: series did not converge", sum, 0.0);
}

// Lambert series sum_{n>=0} x q^n / (1 - x q^n) = -x d/dx log (x;q)_inf.
inline Complex lambert_series(Complex x, Complex q) {
  const double qa = std::abs(q);
  if (qa >= 1.0) throw domain_error("lambert_series: |q| must be < 1");
  Complex sum{0.0, 0.0};
  Complex xq = x;  // x q^n
  for (int n = 0; n < 2000000; ++n) {
    const Complex den = 1.0 - xq;
    if (std::abs(den) < 1e-14 * (1.0 + std::abs(xq)))
      throw pole_error("lambert_series: pole at x q^n = 1");
    sum += xq / den;
    xq *= q;
    if (std::abs(xq) < 1e-18 * (1.0 - qa) * std::max(1.0, std::abs(sum))) return sum;
  }
  throw accuracy_error("lambert_series: series did not converge", sum, 0.0);
}

// Dedekind eta(tau) = q^{1/24} (q;q)_inf with the principal q^{1/24} =
// exp(2 pi i tau / 24).
inline Complex dedekind_eta(Complex tau) {
  if (!(tau.imag() > 0.0)) throw domain_error("dedekind_eta: Im tau must be positive");
  const Complex q = std::exp(two_pi * imag_unit * tau);
  return std::exp(two_pi * imag_unit * tau / 24.0) * pochhammer_inf(q, q).value;
}

// Triple product (q;q)_inf (sqrt(q) x; q)_inf (sqrt(q)/x; q)_inf with
// x = e^{2 pi i xi} and the principal sqrt(q) = e^{pi i tau}. Invariant
// under x -> 1/x; the sign of xi is canonicalized so the symmetry is exact.
inline Complex jacobi_theta(Complex xi, Complex tau) {
  if (!(tau.imag() > 0.0)) throw domain_error("jacobi_theta: Im tau must be positive");
  if (xi.imag() < 0.0 || (xi.imag() == 0.0 && xi.real() < 0.0)) xi = -xi;
  const Complex q = std::exp(two_pi * imag_unit * tau);
  const Complex up = std::exp(imag_unit * pi * tau + two_pi * imag_unit * xi);
  const Complex dn = std::exp(imag_unit * pi * tau - two_pi * imag_unit * xi);
  return pochhammer_inf(q, q).value *
         (pochhammer_inf(up, q).value * pochhammer_inf(dn, q).value);
}

// The coordinate pair (tau, xi) with its derived exponentials and the domain
// flags used by the modular formulas.
class ModularPoint {
 public:
  ModularPoint(Complex tau, Complex xi) : tau_(tau), xi_(xi) {
    if (!(tau.imag() > 0.0)) throw domain_error("ModularPoint: Im tau must be positive");
    ratio_ = xi / tau;
    q_ = std::exp(two_pi * imag_unit * tau);
    x_ = std::exp(two_pi * imag_unit * xi);
    qstar_ = std::exp(-two_pi * imag_unit / tau);
    xstar_ = std::exp(two_pi * imag_unit * ratio_);
  }

  Complex tau() const { return tau_; }
  Complex xi() const { return xi_; }
  Complex q() const { return q_; }
  Complex x() const { return x_; }
  Complex qstar() const { return qstar_; }
  Complex xstar() const { return xstar_; }
  Complex ratio() const { return ratio_; }  // xi / tau

  // xi in (-inf,-1] u [1,inf)
  bool xi_on_real_cut() const {
    return xi_.imag() == 0.0 && std::abs(xi_.real()) >= 1.0;
  }
  // xi/tau in (-inf, 0]
  bool ratio_on_cut() const { return ratio_.imag() == 0.0 && ratio_.real() <= 0.0; }
  double im_ratio() const { return ratio_.imag(); }

 private:
  Complex tau_, xi_, ratio_, q_, x_, qstar_, xstar_;
};

}  // namespace qmod::qseries
