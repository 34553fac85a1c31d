#include <doctest.h>

#include <cmath>
#include <random>

#include "qmod/quad.hpp"
#include "qmod/special.hpp"

using namespace qmod;
using special::cot_kernel;
using special::li2;
using special::log_gamma;
using special::principal_log;
using special::stieltjes_b;

namespace {

// Direct summation oracle for sum 1/n^2 with an Euler-Maclaurin tail; the
// tail terms push the truncation error below 1e-13.
double zeta2_oracle() {
  const int n_terms = 10000;
  double sum = 0.0;
  for (int n = n_terms; n >= 1; --n) sum += 1.0 / (double(n) * n);
  const double big_n = n_terms;
  return sum + 1.0 / big_n - 1.0 / (2.0 * big_n * big_n) + 1.0 / (6.0 * big_n * big_n * big_n);
}

// Alternating series oracle for sum (-1)^{n+1}/n^2, averaged partial sums.
double eta2_oracle() {
  const int n_terms = 100000;
  double s = 0.0;
  double sign = (n_terms % 2 == 0) ? -1.0 : 1.0;
  for (int n = n_terms; n >= 1; --n) {
    s += sign / (double(n) * n);
    sign = -sign;
  }
  const double next = ((n_terms + 1) % 2 == 1 ? 1.0 : -1.0) /
                      (double(n_terms + 1) * (n_terms + 1));
  return s + 0.5 * next;
}

// Quadrature oracle for the dilogarithm: -int_0^1 log(1 - z s)/s ds along the
// straight segment, valid while the segment avoids [1, inf).
Complex li2_quadrature_oracle(Complex z) {
  auto f = [z](Complex s) {
    if (std::abs(s) < 1e-14) return z;
    return -principal_log(1.0 - z * s) / s;
  };
  return quad::integrate_segment(f, {0.0, 0.0}, {1.0, 0.0}).first;
}

}  // namespace

TEST_SUITE_BEGIN("special");

TEST_CASE("principal_log basics") {
  CHECK(std::abs(principal_log({1.0, 0.0})) == 0.0);
  CHECK(std::abs(principal_log({-1.0, 0.0}) - Complex{0.0, pi}) < 1e-15);
  const Complex ei = std::exp(1.0) * imag_unit;
  CHECK(std::abs(principal_log(ei) - Complex{1.0, pi / 2}) < 1e-15);
  CHECK_THROWS_AS(principal_log({0.0, 0.0}), domain_error);
}

TEST_CASE("principal_log branch convention and inversion") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const Complex z{u(rng), u(rng)};
    if (std::abs(z) < 1e-6) continue;
    const Complex w = principal_log(z);
    CHECK(w.imag() > -pi);
    CHECK(w.imag() <= pi);
    CHECK(std::abs(std::exp(w) - z) <= 1e-14 * std::abs(z));
  }
  // negative real axis with a signed zero lands on the +i pi side
  CHECK(principal_log(Complex{-2.0, -0.0}).imag() == doctest::Approx(pi));
}

TEST_CASE("li2 at distinguished points") {
  CHECK(std::abs(li2({0.0, 0.0})) == 0.0);
  CHECK(std::abs(li2({-1.0, 0.0}).real() + eta2_oracle()) < 1e-12);
  CHECK(li2({-1.0, 0.0}).imag() == 0.0);
  // boundary value pi^2/6 approached from inside the disk
  const double lim = zeta2_oracle();
  CHECK(std::abs(li2({1.0 - 1e-10, 0.0}).real() - lim) < 5e-9);
}

TEST_CASE("li2 rejects the cut [1, inf)") {
  CHECK_THROWS_AS(li2({1.0, 0.0}), domain_error);
  CHECK_THROWS_AS(li2({2.5, 0.0}), domain_error);
  CHECK_NOTHROW(li2({2.5, 1e-8}));
  CHECK_NOTHROW(li2({0.999999, 0.0}));
}

TEST_CASE("li2 against the defining-integral quadrature oracle") {
  const Complex points[] = {{0.3, 0.4},  {-0.7, 0.2}, {0.9, 0.0},   {-2.5, 0.1},
                            {0.0, 3.0},  {0.55, 0.6}, {-0.2, -1.4}, {0.2, -0.9}};
  for (const Complex z : points)
    CHECK(std::abs(li2(z) - li2_quadrature_oracle(z)) < 1e-11);
}

TEST_CASE("li2 reflection identity") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> ur(0.02, 0.98), ui(-0.8, 0.8);
  int tested = 0;
  while (tested < 500) {
    const Complex z{ur(rng), ui(rng)};
    if (std::abs(z) >= 1.0) continue;
    ++tested;
    const Complex lhs = li2(z) + li2(1.0 - z) + principal_log(z) * principal_log(1.0 - z);
    CHECK(std::abs(lhs - pi_sq_6) < 1e-11);
  }
}

TEST_CASE("li2 Landen transformation on (0, inf)") {
  for (const double x : {0.02, 0.1, 0.5, 0.9, 1.1, 2.0, 7.0, 50.0}) {
    const Complex lhs = li2({1.0 - x, 0.0}) + li2({1.0 - 1.0 / x, 0.0});
    const double lx = std::log(x);
    CHECK(std::abs(lhs - Complex{-0.5 * lx * lx, 0.0}) < 1e-11);
  }
}

TEST_CASE("li2 mode agreement around the series/log-expansion boundary") {
  // both evaluation modes are exercised on either side of |z| = 0.75 and
  // checked against the defining-integral oracle
  for (const double arg : {1.8, 2.2, 2.8, -2.0, -2.6, 3.14159}) {
    const Complex lo = std::polar(0.7499, arg);
    const Complex hi = std::polar(0.7501, arg);
    CHECK(std::abs(li2(lo) - li2_quadrature_oracle(lo)) < 1e-11);
    CHECK(std::abs(li2(hi) - li2_quadrature_oracle(hi)) < 1e-11);
  }
  for (const double mod : {0.76, 0.9, 0.99})
    CHECK(std::abs(li2(std::polar(mod, 2.9)) - li2_quadrature_oracle(std::polar(mod, 2.9))) <
          1e-11);
  // real arguments stay real through every mode
  for (const double x : {-0.3, -0.7, -0.8, -1.0, -3.0})
    CHECK(li2({x, 0.0}).imag() == 0.0);
}

TEST_CASE("log_gamma at classical points") {
  CHECK(std::abs(log_gamma({2.0, 0.0})) < 1e-15);
  CHECK(std::abs(log_gamma({0.5, 0.0}).real() - std::log(std::sqrt(pi))) < 1e-14);
  CHECK(std::abs(log_gamma({5.0, 0.0}).real() - std::log(24.0)) < 1e-14);
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), pole_error);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), pole_error);
  CHECK_NOTHROW(log_gamma({-2.5, 0.0}));
  // exp(log_gamma) reproduces Gamma off the poles
  CHECK(std::abs(std::exp(log_gamma({-2.5, 0.0})).real() -
                 std::sqrt(pi) / (-2.5 * -1.5 * -0.5)) < 1e-13);
}

TEST_CASE("log_gamma recurrence modulo 2 pi i") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ur(0.05, 20.0), ui(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const Complex z{ur(rng), ui(rng)};
    Complex d = log_gamma(z + 1.0) - log_gamma(z) - principal_log(z);
    const double wrapped = std::remainder(d.imag(), two_pi);
    CHECK(std::abs(Complex{d.real(), wrapped}) < 1e-11);
  }
}

TEST_CASE("log_gamma reflection cross-check") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ur(-4.0, 4.0), ui(0.1, 4.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z{ur(rng), ui(rng)};
    const Complex product = std::exp(log_gamma(z) + log_gamma(1.0 - z));
    CHECK(std::abs(product - pi / std::sin(pi * z)) < 1e-11 * std::abs(product));
  }
}

TEST_CASE("bernoulli table") {
  CHECK(special::bernoulli(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(special::bernoulli(4) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
  CHECK(special::bernoulli(12) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));
  CHECK(special::bernoulli(60) == doctest::Approx(-2.13999492572253349e+34).epsilon(1e-15));
  CHECK_THROWS_AS(special::bernoulli(3), domain_error);
  CHECK_THROWS_AS(special::bernoulli(0), domain_error);
  CHECK_THROWS_AS(special::bernoulli(62), domain_error);
}

TEST_CASE("stieltjes_b values and symmetry") {
  CHECK(std::abs(stieltjes_b({0.0, 0.0})) == 0.0);
  // closed form at t = 1, evaluated independently here
  const double direct = 1.0 / std::expm1(two_pi) - 1.0 / two_pi + 0.5;
  CHECK(std::abs(stieltjes_b({1.0, 0.0}).real() - direct) < 1e-15);
  CHECK(direct == doctest::Approx(0.3427160).epsilon(1e-6));

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Complex t{u(rng), u(rng)};
    CHECK(std::abs(stieltjes_b(t) + stieltjes_b(-t)) < 1e-12);
  }
}

TEST_CASE("stieltjes_b series matches the closed form on the overlap annulus") {
  // implementation uses the series below |2 pi t| = 1/4; compare it against
  // an independent closed-form evaluation on 0.1 < |2 pi t| < 0.25
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> umod(0.1, 0.249), uarg(0.0, two_pi);
  for (int i = 0; i < 400; ++i) {
    const Complex u = std::polar(umod(rng), uarg(rng));
    const Complex t = u / two_pi;
    const Complex closed = 1.0 / (std::exp(u) - 1.0) - 1.0 / u + 0.5;
    CHECK(std::abs(stieltjes_b(t) - closed) < 1e-12);
  }
}

TEST_CASE("stieltjes_b pole rejection") {
  CHECK_THROWS_AS(stieltjes_b({0.0, 1.0}), pole_error);
  CHECK_THROWS_AS(stieltjes_b({0.0, -2.0}), pole_error);
  CHECK_NOTHROW(stieltjes_b({0.5, 1.0}));
}

TEST_CASE("cot_kernel values and symmetry") {
  CHECK(std::abs(cot_kernel({0.0, 0.0}) - Complex{-1.0 / 6.0, 0.0}) < 1e-16);
  CHECK(std::abs(cot_kernel({0.7, 0.0}) - cot_kernel({-0.7, 0.0})) < 1e-16);
  CHECK(std::abs(cot_kernel({pi, 0.0}).real() + 2.0 / (pi * pi)) < 1e-15);
  CHECK_THROWS_AS(cot_kernel({two_pi, 0.0}), pole_error);
  CHECK_THROWS_AS(cot_kernel({-2.0 * two_pi, 0.0}), pole_error);
}

TEST_CASE("cot_kernel series matches the closed form on the overlap annulus") {
  // implementation uses the series below |t| = 1/2; compare it against the
  // direct trigonometric evaluation on 0.1 < |t| < 0.25
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> umod(0.1, 0.25), uarg(0.0, two_pi);
  for (int i = 0; i < 400; ++i) {
    const Complex t = std::polar(umod(rng), uarg(rng));
    const Complex closed = (std::cos(0.5 * t) / std::sin(0.5 * t) - 2.0 / t) / t;
    CHECK(std::abs(cot_kernel(t) - closed) < 1e-12);
  }
}

TEST_SUITE_END();
