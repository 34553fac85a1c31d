#pragma once

// Modular machinery for (x;q)_inf: the Stirling remainder G and its
// antisymmetrization G*, the ray-integral family P^d with automatic
// direction selection, the lateral functions P_-/P_+, the real-parameter
// contour P on the detoured half-line, the Stieltjes term M(alpha, nu), the
// Laplace-type integral of the kernel B, its divergent asymptotic expansion
// with optimal truncation, the Stokes jump series, and the multiplicative
// factor K linking (x;q)_inf to (x*;q*)_inf.

#include <cmath>
#include <complex>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/qseries.hpp"
#include "qmod/quad.hpp"
#include "qmod/special.hpp"

namespace qmod::modular {

// A point of the logarithmic Riemann surface: modulus and an unconstrained
// argument (the caller tracks the sheet).
struct SectorPoint {
  double modulus = 1.0;
  double argument = 0.0;

  explicit SectorPoint(double mod, double arg) : modulus(mod), argument(arg) {
    if (!(mod > 0.0)) throw domain_error("SectorPoint: modulus must be positive");
  }
  static SectorPoint from(Complex z) {
    if (z == Complex{0.0, 0.0}) throw domain_error("SectorPoint: zero has no argument");
    return SectorPoint(std::abs(z), std::arg(z));
  }
  Complex value() const { return std::polar(modulus, argument); }
};

// ---------------------------------------------------------------------------
// Stirling remainder
// ---------------------------------------------------------------------------

// G(tau, xi) = -log Gamma(xi/tau + 1) + (xi/tau + 1/2) log(xi/tau) - xi/tau
//              + log sqrt(2 pi), defined for xi/tau off (-inf, 0].
inline Complex g_term(Complex tau, Complex xi) {
  const Complex w = xi / tau;
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw domain_error("g_term: xi/tau lies on (-inf, 0]");
  return -special::log_gamma(w + 1.0) + (w + 0.5) * special::principal_log(w) - w +
         half_log_two_pi;
}

namespace detail {

// Sign canonicalization for quantities odd in xi; keeps the symmetry exact.
inline bool negative_leading_sign(Complex xi) {
  return xi.imag() < 0.0 || (xi.imag() == 0.0 && xi.real() < 0.0);
}

}  // namespace detail

// G*(tau, xi) = (G(tau, xi) - G(tau, -xi)) / 2, odd in xi by construction.
inline Complex g_star(Complex tau, Complex xi) {
  if (detail::negative_leading_sign(xi)) return -g_star(tau, -xi);
  return 0.5 * (g_term(tau, xi) - g_term(tau, -xi));
}

// ---------------------------------------------------------------------------
// Ray integrals
// ---------------------------------------------------------------------------

enum class RayBranch { minus, plus };  // d in (-pi, 0) vs d in (0, pi)

// An admissible integration direction: d = arg(tau) - sigma with
// sigma in (0, pi) and margin = sin(sigma) - |Im(xi e^{-i sigma})| > 0,
// which is the exponential decay rate (per unit |tau|) of the integrand.
struct RayChoice {
  double d = 0.0;
  double sigma = 0.0;
  double margin = 0.0;
};

namespace detail {

inline RayChoice choose_ray_impl(double arg_tau, Complex xi, RayBranch branch) {
  // the strip margin is even in xi; canonicalize so +-xi choose identically
  if (negative_leading_sign(xi)) xi = -xi;
  constexpr int grid = 256;
  RayChoice best{0.0, 0.0, -std::numeric_limits<double>::infinity()};
  for (int j = 0; j < grid; ++j) {
    const double sigma = pi * (j + 1) / (grid + 1);
    const double d = arg_tau - sigma;
    const bool admissible =
        (branch == RayBranch::minus) ? (d > -pi && d < 0.0) : (d > 0.0 && d < pi);
    if (!admissible) continue;
    const double margin =
        std::sin(sigma) - std::abs((xi * std::polar(1.0, -sigma)).imag());
    if (margin > best.margin) best = {d, sigma, margin};  // ties keep the smaller sigma
  }
  if (!(best.margin > 0.0))
    throw domain_error(branch == RayBranch::minus ? "choose_ray: outside Omega-"
                                                  : "choose_ray: outside Omega+");
  return best;
}

}  // namespace detail

// Scans sigma over a fixed 256-point grid in (0, pi), keeps directions with
// d = arg(tau) - sigma in the branch's interval, and returns the choice of
// maximal margin. Deterministic (ties break to the smaller sigma).
inline RayChoice choose_ray(Complex tau, Complex xi, RayBranch branch) {
  if (tau == Complex{0.0, 0.0}) throw domain_error("choose_ray: tau must be nonzero");
  return detail::choose_ray_impl(std::arg(tau), xi, branch);
}

// Variant for tau given on the logarithmic surface (argument beyond the
// principal range).
inline RayChoice choose_ray_on_sheet(const SectorPoint& tau, Complex xi, RayBranch branch) {
  return detail::choose_ray_impl(tau.argument, xi, branch);
}

namespace detail {

// sin(w) / (e^v - 1) evaluated without overflow when Re v is large (the
// regime reached along admissible rays, where the margin condition keeps
// |Im w| < Re v).
inline Complex sin_over_expm1(Complex w, Complex v) {
  if (v.real() <= 30.0) return std::sin(w) / special::detail::expm1c(v);
  const Complex a = std::exp(imag_unit * w - v);
  const Complex b = std::exp(-imag_unit * w - v);
  return (a - b) / (2.0 * imag_unit * (1.0 - std::exp(-v)));
}

// cos(w) / (e^v - 1), same stabilization.
inline Complex cos_over_expm1(Complex w, Complex v) {
  if (v.real() <= 30.0) return std::cos(w) / special::detail::expm1c(v);
  const Complex a = std::exp(imag_unit * w - v);
  const Complex b = std::exp(-imag_unit * w - v);
  return (a + b) / (2.0 * (1.0 - std::exp(-v)));
}

}  // namespace detail

// P^d(tau, xi) = int_0^{inf e^{id}} sin(xi t / tau)/(e^{i t/tau} - 1)
//                (cot(t/2) - 2/t) dt/t over the chosen ray. Odd in xi; the
// sign is canonicalized so the symmetry holds exactly.
inline Complex p_ray(Complex tau, Complex xi, const RayChoice& choice,
                     const quad::QuadratureSettings& s = {}) {
  if (!(choice.margin > 0.0)) throw domain_error("p_ray: inadmissible ray choice");
  if (detail::negative_leading_sign(xi)) return -p_ray(tau, -xi, choice, s);
  const Complex w_slope = xi / tau;
  const Complex v_slope = imag_unit / tau;
  auto f = [=](Complex t) {
    return detail::sin_over_expm1(w_slope * t, v_slope * t) * special::cot_kernel(t);
  };
  return quad::integrate_ray(f, choice.d, s);
}

// The lateral function P_- (directions d in (-pi, 0)); analytic over Omega-.
inline Complex p_minus(Complex tau, Complex xi, const quad::QuadratureSettings& s = {}) {
  return p_ray(tau, xi, choose_ray(tau, xi, RayBranch::minus), s);
}

// The lateral function P_+ (directions d in (0, pi)).
inline Complex p_plus(Complex tau, Complex xi, const quad::QuadratureSettings& s = {}) {
  return p_ray(tau, xi, choose_ray(tau, xi, RayBranch::plus), s);
}

// Real-parameter contour integral over the detoured half-line: integrand
// sin(nu t)/(e^{t/alpha} - 1) (cot(t/2) - 2/t)/t with detours of radius r
// around its real poles t = 2 pi k, k >= 1.
inline Complex p_contour_real(double alpha, double nu, double r,
                              quad::DetourSide side = quad::DetourSide::below,
                              const quad::QuadratureSettings& s = {}) {
  if (!(alpha > 0.0)) throw domain_error("p_contour_real: alpha must be positive");
  if (!(r > 0.0 && r < pi)) throw domain_error("p_contour_real: need 0 < r < pi");
  auto f = [=](Complex t) {
    return detail::sin_over_expm1(nu * t, t / alpha) * special::cot_kernel(t);
  };
  // 1/(e^{t/alpha}-1) ~ e^{-2 pi k/alpha} at the k-th pole; list enough poles
  // for the early-exit cutoff to trigger first.
  const int k_max = std::max(6, int(std::ceil(alpha * 52.0 / two_pi)) + 4);
  std::vector<double> poles(k_max);
  for (int k = 1; k <= k_max; ++k) poles[k - 1] = two_pi * k;
  return quad::contour_ell(f, r, poles, side, s);
}

// ---------------------------------------------------------------------------
// The Stieltjes term M(alpha, nu)
// ---------------------------------------------------------------------------

namespace detail {

// Inner sum of the principal-value integrand,
//   F(t) = sum_{n>=1} sin(2 pi nu n t) / (n (e^{2 pi n t / alpha} - 1)),
// which behaves like nu alpha log(1/t) as t -> 0+. Direct summation needs
// ~alpha/t terms, so below the switch point the tail beyond n_em explicit
// terms is replaced by an Euler-Maclaurin tail built on
// Psi(y) = e^{i b y} / (y (e^{a y} - 1)), a = 2 pi t/alpha, b = 2 pi nu t,
// and Phi(s) = int_s^inf sin(2 pi nu u)/(u (e^{2 pi u/alpha}-1)) du.
// Phi carries the logarithm: Phi(s) = nu alpha log(1/s)
//   + int_s^1 (psi(u) - nu alpha/u) du + Phi(1).
class StieltjesInnerSum {
 public:
  StieltjesInnerSum(double alpha, double nu, const quad::QuadratureSettings& s)
      : alpha_(alpha), nu_(nu), quad_(s) {
    if (nu_ != 0.0)
      phi_at_anchor_ =
          quad::integrate_ray([this](Complex u) { return Complex(psi(u.real() + 1.0), 0.0); },
                              0.0, quad_)
              .real();
  }

  double operator()(double t) const {
    if (nu_ == 0.0 || t == 0.0) return 0.0;
    if (t >= switch_point()) return direct(t);
    return accelerated(t);
  }

  // Below this the Euler-Maclaurin tail replaces direct summation. The cap
  // keeps 2 pi nu t modest at the switch so the boundary-term expansion
  // stays accurate for large |nu|.
  double switch_point() const { return std::min(t_switch, 0.03 / std::max(1.0, std::abs(nu_))); }

  double direct(double t) const {
    const double a = two_pi * t / alpha_;
    const double b = two_pi * nu_ * t;
    const double ratio = std::exp(-a);
    double sum = 0.0;
    double decay = ratio;  // e^{-a n}
    for (int n = 1; n < 2000000; ++n) {
      const double den = std::expm1(a * n);
      if (std::isinf(den)) break;
      sum += std::sin(b * n) / (n * den);
      decay *= ratio;
      if (decay / ((n + 1.0) * (1.0 - ratio)) < 1e-18 * (std::abs(sum) + 1e-3)) break;
    }
    return sum;
  }

  // Tail beyond n_em explicit terms:
  //   sum_{n>=N} Im Psi(n) = Phi(N t)
  //     + Im[Psi/2 - Psi'/12 + Psi'''/720 - Psi^(5)/30240](N),
  // the derivatives built from the log-derivative chain L = Psi'/Psi and
  // Bell polynomials.
  double accelerated(double t) const {
    const double a = two_pi * t / alpha_;
    const double b = two_pi * nu_ * t;
    double sum = 0.0;
    for (int n = 1; n < n_em; ++n) sum += std::sin(b * n) / (n * std::expm1(a * n));

    const double y = n_em;
    if (a * y > 600.0) return sum;  // tail below ~1e-260
    sum += phi_from(y * t);

    const double f1 = 1.0 / std::expm1(a * y);  // 1/(e^{a y} - 1)
    const double g1 = f1 * (1.0 + f1);
    const double h1 = 1.0 + 2.0 * f1;
    const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
    const double y2 = y * y, y3 = y2 * y, y4 = y3 * y, y5 = y4 * y;

    const Complex psi_n = std::exp(Complex(0.0, b * y)) * (f1 / y);
    const Complex L = Complex(0.0, b) - 1.0 / y - a * (1.0 + f1);
    const Complex L1 = 1.0 / y2 + a2 * g1;
    const Complex L2 = -2.0 / y3 - a3 * g1 * h1;
    const Complex L3 = 6.0 / y4 + a4 * g1 * (h1 * h1 + 2.0 * g1);
    const Complex L4 = -24.0 / y5 - a5 * g1 * h1 * (h1 * h1 + 8.0 * g1);

    const Complex d1 = psi_n * L;
    const Complex d3 = psi_n * (L * L * L + 3.0 * L * L1 + L2);
    const Complex d5 =
        psi_n * (L * L * L * L * L + 10.0 * L * L * L * L1 + 15.0 * L * L1 * L1 +
                 10.0 * L * L * L2 + 10.0 * L1 * L2 + 5.0 * L * L3 + L4);
    sum += (0.5 * psi_n - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0).imag();
    return sum;
  }

  // psi(u) = sin(2 pi nu u) / (u (e^{2 pi u/alpha} - 1)) = (nu alpha/u) *
  //          sinc(2 pi nu u) / em1r(2 pi u/alpha).
  double psi(double u) const {
    return std::sin(two_pi * nu_ * u) / (u * std::expm1(two_pi * u / alpha_));
  }

  // psi(u) - nu alpha / u, the smooth remainder after the logarithmic part.
  // Below u_series the direct formula cancels to O(u) and the series deltas
  // take over; the threshold keeps both 2 pi nu u and 2 pi u / alpha small
  // enough for the truncated expansions.
  double psi_reg(double u) const {
    const double u_series = std::min({0.002, 0.12 / std::max(1.0, std::abs(two_pi * nu_)),
                                      0.12 * alpha_ / two_pi});
    if (u >= u_series) return psi(u) - nu_ * alpha_ / u;
    // sinc(w)/em1r(v) - 1 = dp + dq + dp dq with the series deltas
    const double w = two_pi * nu_ * u, v = two_pi * u / alpha_;
    const double w2 = w * w, v2 = v * v;
    const double dp =
        w2 * (-1.0 / 6.0 + w2 * (1.0 / 120.0 + w2 * (-1.0 / 5040.0 + w2 / 362880.0)));
    const double dq = -v / 2.0 + v2 / 12.0 - v2 * v2 / 720.0 + v2 * v2 * v2 / 30240.0 -
                      v2 * v2 * v2 * v2 / 1209600.0;
    return (nu_ * alpha_ / u) * (dp + dq + dp * dq);
  }

  double phi_from(double s) const {
    if (s >= 1.0)
      return quad::integrate_ray(
                 [this, s](Complex u) { return Complex(psi(u.real() + s), 0.0); }, 0.0, quad_)
          .real();
    const auto seg = quad::integrate_segment(
        [this](Complex u) { return Complex(psi_reg(u.real()), 0.0); }, Complex(s, 0.0),
        Complex(1.0, 0.0), quad_);
    return nu_ * alpha_ * std::log(1.0 / s) + seg.first.real() + phi_at_anchor_;
  }

  static constexpr double t_switch = 0.015;
  static constexpr int n_em = 64;

 private:
  double alpha_ = 1.0;
  double nu_ = 0.0;
  double phi_at_anchor_ = 0.0;  // Phi(1)
  quad::QuadratureSettings quad_;
};

}  // namespace detail

// M(alpha, nu) = -sum_{n>=1} cos(2 n pi nu)/(n (e^{2 n pi/alpha} - 1))
//   - (2/pi) PV int_0^inf F(t) dt/(1 - t^2), real for real inputs.
inline Complex m_stieltjes(double alpha, double nu,
                           const quad::QuadratureSettings& s = {}) {
  if (!(alpha > 0.0)) throw domain_error("m_stieltjes: alpha must be positive");
  s.validate();

  const double c = two_pi / alpha;
  double series = 0.0;
  for (int n = 1; n < 200000; ++n) {
    const double den = std::expm1(c * n);
    if (std::isinf(den)) break;
    series -= std::cos(two_pi * nu * n) / (n * den);
    const double tail = std::exp(-c * (n + 1)) / ((n + 1.0) * (-std::expm1(-c)));
    if (tail < 1e-18) break;
  }

  const detail::StieltjesInnerSum inner(alpha, nu, s);
  const Complex pv =
      quad::pv_integral_unit([&inner](Complex t) { return Complex(inner(t.real()), 0.0); }, s);
  return Complex(series, 0.0) - (2.0 / pi) * pv;
}

// ---------------------------------------------------------------------------
// The Laplace-type integral of B and its divergent expansion
// ---------------------------------------------------------------------------

// int_0^inf B(-(log q / 2 pi) t) x^t dt/t for q, x in (0,1). The integrand's
// t -> 0 limit pi alpha / 6 is removable (series mode of B).
inline double b_integral(double q, double x, const quad::QuadratureSettings& s = {}) {
  if (!(q > 0.0 && q < 1.0)) throw domain_error("b_integral: q must lie in (0,1)");
  if (!(x > 0.0 && x < 1.0)) throw domain_error("b_integral: x must lie in (0,1)");
  const double alpha = -std::log(q) / two_pi;
  const double rate = -std::log(x);
  auto f = [=](Complex t) {
    return special::stieltjes_b(alpha * t) * std::exp(-rate * t) / t;
  };
  return quad::integrate_ray(f, 0.0, s).real();
}

// Watson's lemma applied termwise to the Taylor series of B under the
// Laplace integral: term k = B_{2k} (2 pi eps)^{2k-1} Gamma(2k-1)
// / ((2k)! (-log x)^{2k-1}) with eps = -log q / (2 pi), i.e.
// B_{2k} r^{2k-1} / ((2k)(2k-1)) with r = log q / log x. The factorial
// growth of B_{2k} Gamma(2k-1) makes the series divergent; the magnitudes
// fall to a minimum near 2k ~ 2 pi / r and grow afterwards. When that
// turning point lies beyond k_max the minimum sits at the last computed
// term.
struct AsymptoticSeries {
  std::vector<Complex> coefficients;  // term k at index k-1
  int optimal_index = 0;              // 1-based index of the smallest |term|
  double optimal_error = 0.0;         // magnitude of the first omitted term

  Complex partial_sum(int k) const {
    Complex s{0.0, 0.0};
    for (int j = 0; j < k && j < int(coefficients.size()); ++j) s += coefficients[j];
    return s;
  }
  Complex partial_at_optimal() const { return partial_sum(optimal_index); }
};

inline AsymptoticSeries asymptotic_b_series(double q, double x, int k_max) {
  if (!(q > 0.0 && q < 1.0)) throw domain_error("asymptotic_b_series: q must lie in (0,1)");
  if (!(x > 0.0 && x < 1.0)) throw domain_error("asymptotic_b_series: x must lie in (0,1)");
  if (k_max < 1 || k_max > 30)
    throw domain_error("asymptotic_b_series: k_max must lie in [1, 30]");

  const double r = std::log(q) / std::log(x);
  AsymptoticSeries out;
  double rpow = r;  // r^{2k-1}
  for (int k = 1; k <= k_max; ++k) {
    out.coefficients.emplace_back(
        special::bernoulli(2 * k) * rpow / ((2.0 * k) * (2.0 * k - 1.0)), 0.0);
    rpow *= r * r;
  }
  int k_opt = 1;
  double best = std::abs(out.coefficients[0]);
  for (int k = 2; k <= k_max; ++k) {
    const double mag = std::abs(out.coefficients[k - 1]);
    if (mag < best) {
      best = mag;
      k_opt = k;
    }
  }
  out.optimal_index = k_opt;
  if (k_opt < k_max) {
    out.optimal_error = std::abs(out.coefficients[k_opt]);
  } else {
    // First omitted term estimated from |B_{2k+2}/B_{2k}| ~ (2k+1)(2k+2)/(2 pi)^2.
    const double growth =
        (2.0 * k_max) * (2.0 * k_max - 1.0) * (r / two_pi) * (r / two_pi);
    out.optimal_error = std::abs(out.coefficients[k_max - 1]) * growth;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stokes jump
// ---------------------------------------------------------------------------

// 2 i sum_{n>=1} sin(2 n xi pi / tau) / (n (e^{2 n pi i / tau} - 1)),
// convergent iff |Im(xi/tau)| < -Im(1/tau). Terms are assembled from
// exponentials with moduli < 1:
//   term_n = (A^n - B^n) / (2 i (1 - C^n)),
//   A = e^{2 pi i (w - c)}, B = e^{-2 pi i (w + c)}, C = e^{-2 pi i c},
// with w = xi/tau, c = 1/tau.
inline Complex stokes_sum(Complex tau, Complex xi) {
  if (detail::negative_leading_sign(xi)) return -stokes_sum(tau, -xi);  // odd in xi
  const Complex w = xi / tau;
  const Complex c = 1.0 / tau;
  if (!(std::abs(w.imag()) < -c.imag()))
    throw domain_error("stokes_sum: requires |Im(xi/tau)| < -Im(1/tau)");

  const Complex A = std::exp(two_pi * imag_unit * (w - c));
  const Complex B = std::exp(-two_pi * imag_unit * (w + c));
  const Complex C = std::exp(-two_pi * imag_unit * c);
  const double rho = std::max(std::abs(A), std::abs(B));
  const double rho_c = std::abs(C);

  Complex sum{0.0, 0.0};
  Complex An = A, Bn = B, Cn = C;
  double rho_n = rho;
  for (int n = 1; n < 200000; ++n) {
    sum += (An - Bn) / (2.0 * imag_unit * (1.0 - Cn) * double(n));
    An *= A;
    Bn *= B;
    Cn *= C;
    rho_n *= rho;
    const double tail = rho_n / ((n + 1.0) * (1.0 - rho) * (1.0 - rho_c));
    if (tail < 1e-18 * (std::abs(sum) + 1e-3)) break;
  }
  return 2.0 * imag_unit * sum;
}

// ---------------------------------------------------------------------------
// The modular factor
// ---------------------------------------------------------------------------

// Right-hand side of the modular representation:
//   q^{-1/24} sqrt(1-x) (x* q*; q*)_inf
//   exp(li2(x)/log q + G(tau, xi) + P_-(tau, xi)),
// with log q = 2 pi i tau exactly (not the principal log of the computed q)
// and sqrt(1-x) = exp(log(1-x)/2) on the principal branch.
inline Complex xqmain_rhs(const qseries::ModularPoint& p,
                          const quad::QuadratureSettings& s = {}) {
  if (p.xi_on_real_cut())
    throw domain_error("xqmain_rhs: xi lies on (-inf,-1] u [1,inf)");
  if (p.ratio_on_cut()) throw domain_error("xqmain_rhs: xi/tau lies on (-inf, 0]");
  const Complex log_q = two_pi * imag_unit * p.tau();
  const Complex prefactor = std::exp(-log_q / 24.0);
  const Complex root = std::exp(0.5 * special::principal_log(1.0 - p.x()));
  const Complex product = qseries::pochhammer_inf(p.xstar() * p.qstar(), p.qstar()).value;
  const Complex exponent =
      special::li2(p.x()) / log_q + g_term(p.tau(), p.xi()) + p_minus(p.tau(), p.xi(), s);
  return prefactor * root * product * std::exp(exponent);
}

// K(q, x) with (x;q)_inf = K(q,x) (x*;q*)_inf. The radical depends on the
// half-plane of xi/tau:
//   sqrt((1-x)/(1-x*))                     for xi in tau H (Im(xi/tau) > 0),
//   sqrt((1-x)(1-1/x*)) / (1-x*)           for xi in -tau H.
inline Complex k_factor(const qseries::ModularPoint& p,
                        const quad::QuadratureSettings& s = {}) {
  if (p.xi_on_real_cut())
    throw domain_error("k_factor: xi lies on (-inf,-1] u [1,inf)");
  if (p.ratio_on_cut()) throw domain_error("k_factor: xi/tau lies on (-inf, 0]");
  if (p.im_ratio() == 0.0)
    throw domain_error("k_factor: Im(xi/tau) must be nonzero to select a branch");
  const Complex log_q = two_pi * imag_unit * p.tau();
  const Complex exponent =
      special::li2(p.x()) / log_q + g_star(p.tau(), p.xi()) + p_minus(p.tau(), p.xi(), s);
  Complex radical;
  if (p.im_ratio() > 0.0) {
    radical = std::sqrt((1.0 - p.x()) / (1.0 - p.xstar()));
  } else {
    radical = std::sqrt((1.0 - p.x()) * (1.0 - 1.0 / p.xstar())) / (1.0 - p.xstar());
  }
  return std::exp(-log_q / 24.0) * radical * std::exp(exponent);
}

}  // namespace qmod::modular
