// Acceptance suite: end-to-end checks of every verified identity at its
// pinned tolerance, printed one line per criterion. Run all criteria with no
// arguments or a single one with --criterion N. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qmod/modular.hpp"
#include "qmod/qseries.hpp"
#include "qmod/verify.hpp"

using namespace qmod;
using verify::Identity;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

bool g_verbose = true;

void detail_line(const char* fmt, ...) {
  if (!g_verbose) return;
  va_list ap;
  va_start(ap, fmt);
  std::printf("         ");
  std::vprintf(fmt, ap);
  std::printf("\n");
  va_end(ap);
}

// 1. Euler series vs the infinite product on a 25-point complex grid.
bool criterion_1() {
  Timer timer;
  double worst = 0.0;
  for (const double qm : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (const double xm : {0.4, 0.8, 1.2, 1.6, 2.0}) {
      verify::Params p{{"x", std::polar(xm, 1.3 * xm)}, {"q", std::polar(qm, 0.7 * qm)}};
      const auto rep = verify::verify(Identity::EULER, p);
      if (rep.skipped || !rep.pass) return false;
      worst = std::max(worst, rep.rel_err);
    }
  const double elapsed = timer.seconds();
  detail_line("max rel_err %.3e on 25 points, %.3f s (budget 1 s)", worst, elapsed);
  return worst <= 1e-11 && elapsed < 1.0;
}

// 2. The real-parameter series representation across the (alpha, nu) grid
// plus the removable nu -> 0 point.
bool criterion_2() {
  Timer timer;
  bool ok = true;
  for (const double alpha : {0.5, 1.0, 2.0})
    for (const double nu : {-0.5, 0.0, 0.5, 1.5}) {
      const auto rep =
          verify::verify(Identity::MAIN, {{"alpha", alpha}, {"nu", nu}});
      const bool point_ok = !rep.skipped && rep.pass;
      detail_line("alpha=%.1f nu=%4.1f |lhs|=%.3e abs_err=%.3e rel_err=%.3e %s", alpha, nu,
                  std::abs(rep.lhs), rep.abs_err, rep.rel_err,
                  point_ok ? "ok" : "FAIL");
      ok = ok && point_ok;
    }
  const double elapsed = timer.seconds();
  detail_line("%.3f s (budget 30 s)", elapsed);
  if (!ok)
    detail_line(
        "note: points with |log (x;q)| near 1e-14 cannot reach rel_err 1e-8 in double "
        "precision; the O(1) terms of the identity already carry ~1e-16 rounding");
  return ok && elapsed < 30.0;
}

// 3. The dilogarithm representation for q, x in (0,1).
bool criterion_3() {
  Timer timer;
  double worst = 0.0;
  for (const double q : {0.3, 0.6, 0.9})
    for (const double x : {0.2, 0.5, 0.8}) {
      const auto rep = verify::verify(Identity::MAINTER, {{"q", q}, {"x", x}});
      if (rep.skipped || !rep.pass) return false;
      worst = std::max(worst, rep.rel_err);
    }
  const double elapsed = timer.seconds();
  detail_line("max rel_err %.3e on 9 points, %.3f s (budget 60 s)", worst, elapsed);
  return worst <= 1e-8 && elapsed < 60.0;
}

// 4. The Stieltjes term against log-product + contour correction.
bool criterion_4() {
  Timer timer;
  double worst = 0.0;
  for (const double alpha : {0.5, 1.0, 2.0})
    for (const double nu : {0.1, 0.3, 0.7}) {
      const auto rep = verify::verify(Identity::MP, {{"alpha", alpha}, {"nu", nu}});
      if (rep.skipped || !rep.pass) return false;
      worst = std::max(worst, rep.rel_err);
    }
  const double elapsed = timer.seconds();
  detail_line("max rel_err %.3e on 9 points, %.3f s (budget 120 s)", worst, elapsed);
  return worst <= 1e-7 && elapsed < 120.0;
}

// 5. Lateral-function slice vs the real contour, plus independence from the
// ray direction and the detour radius.
bool criterion_5() {
  Timer timer;
  quad::QuadratureSettings s;
  double worst_rel = 0.0, worst_ray = 0.0, worst_radius = 0.0;
  for (const double alpha : {0.5, 1.0, 2.0})
    for (const double nu : {0.1, 0.3, 0.7}) {
      const auto rep = verify::verify(Identity::PP_SLICE, {{"alpha", alpha}, {"nu", nu}});
      if (rep.skipped || !rep.pass) return false;
      worst_rel = std::max(worst_rel, rep.rel_err);

      const Complex tau{0.0, alpha}, xi{0.0, nu * alpha};
      const auto best = modular::choose_ray(tau, xi, modular::RayBranch::minus);
      modular::RayChoice alt{best.d - 0.4, best.sigma + 0.4, 0.0};
      alt.margin = std::sin(alt.sigma) - std::abs((xi * std::polar(1.0, -alt.sigma)).imag());
      if (alt.margin <= 0.0) {
        alt = {best.d + 0.4, best.sigma - 0.4, 0.0};
        alt.margin = std::sin(alt.sigma) - std::abs((xi * std::polar(1.0, -alt.sigma)).imag());
      }
      worst_ray = std::max(worst_ray, std::abs(modular::p_ray(tau, xi, best, s) -
                                               modular::p_ray(tau, xi, alt, s)));
      worst_radius = std::max(
          worst_radius,
          std::abs(modular::p_contour_real(alpha, nu, 0.3, quad::DetourSide::below, s) -
                   modular::p_contour_real(alpha, nu, 0.6, quad::DetourSide::below, s)));
    }
  detail_line("slice max rel %.3e, ray-direction %.3e, detour-radius %.3e, %.3f s",
              worst_rel, worst_ray, worst_radius, timer.seconds());
  return worst_rel <= 1e-9 && worst_ray <= 1e-9 && worst_radius <= 1e-10;
}

// 6. Lateral jump equals the explicit series at nine admissible points.
bool criterion_6() {
  Timer timer;
  double worst = 0.0;
  for (const Complex tau : {Complex{0.2, 0.8}, Complex{0.0, 1.0}, Complex{0.5, 1.2}})
    for (const Complex xi : {Complex{0.1, 0.0}, Complex{0.05, 0.1}, Complex{-0.3, 0.0}}) {
      const auto rep = verify::verify(Identity::STOKES, {{"tau", tau}, {"xi", xi}});
      if (rep.skipped || !rep.pass) return false;
      worst = std::max(worst, rep.abs_err);
    }
  const double elapsed = timer.seconds();
  detail_line("max |P- - P+ - S| %.3e on 9 points, %.3f s (budget 60 s)", worst, elapsed);
  return worst <= 1e-9 && elapsed < 60.0;
}

// 7. The modular representation of (x;q)_inf on a 3x3 grid including the
// diagonal slice xi = tau, with no 2 pi k exponent offsets.
bool criterion_7() {
  Timer timer;
  double worst = 0.0;
  int offsets = 0;
  for (const Complex tau : {Complex{0.0, 1.0}, Complex{0.2, 0.9}, Complex{0.0, 0.6}})
    for (int j = 0; j < 3; ++j) {
      const Complex xi = (j == 0) ? Complex{0.25, 0.0} : (j == 1) ? Complex{0.2, 0.05} : tau;
      const auto rep = verify::verify(Identity::XQMAIN, {{"tau", tau}, {"xi", xi}});
      if (rep.skipped || !rep.pass) return false;
      worst = std::max(worst, rep.rel_err);
      if (rep.offset_2pik != 0) ++offsets;
    }
  const double elapsed = timer.seconds();
  detail_line("max rel_err %.3e, nonzero offsets %d, %.3f s (budget 120 s)", worst, offsets,
              elapsed);
  return worst <= 1e-8 && offsets == 0 && elapsed < 120.0;
}

// 8. Modular corollaries: eta transform and stability of the triple-product
// multiplier across xi.
bool criterion_8() {
  Timer timer;
  double worst_eta = 0.0, worst_stab = 0.0;
  for (const Complex tau : {Complex{0.0, 1.0}, Complex{0.3, 0.7}, Complex{0.0, 2.0}}) {
    const auto rep = verify::verify(Identity::ETA_MODULAR, {{"tau", tau}});
    if (rep.skipped || !rep.pass) return false;
    worst_eta = std::max(worst_eta, rep.rel_err);

    Complex first{0.0, 0.0};
    for (const double xr : {0.1, 0.2, 0.3}) {
      const Complex xi{xr, 0.0};
      const Complex lhs = qseries::jacobi_theta((xi + 0.5) / tau - 0.5, -1.0 / tau);
      const Complex gaussian = std::exp(imag_unit * pi * (xi + 0.5) * (xi + 0.5) / tau);
      const Complex mult = lhs / (gaussian * qseries::jacobi_theta(xi, tau));
      if (first == Complex{0.0, 0.0})
        first = mult;
      else
        worst_stab = std::max(worst_stab, std::abs(mult - first) / std::abs(first));
    }
  }
  detail_line("eta max rel %.3e, theta multiplier stability %.3e, %.3f s", worst_eta,
              worst_stab, timer.seconds());
  return worst_eta <= 1e-10 && worst_stab <= 1e-9;
}

// 9. The divergent expansion: term magnitudes fall then rise at q = 0.999,
// the optimal partial sum matches the integral within twice the first
// omitted term, and the optimal index climbs toward q = 1.
bool criterion_9() {
  Timer timer;
  quad::QuadratureSettings s;

  const auto series = modular::asymptotic_b_series(0.999, 0.5, 30);
  bool fell = false, rose_after_fall = false;
  for (std::size_t k = 1; k < series.coefficients.size(); ++k) {
    const double prev = std::abs(series.coefficients[k - 1]);
    const double cur = std::abs(series.coefficients[k]);
    if (cur < prev) fell = true;
    if (fell && cur > prev) rose_after_fall = true;
  }
  const bool shape_ok = fell && rose_after_fall;
  const double max_ratio = std::abs(series.coefficients[29] / series.coefficients[28]);
  detail_line("q=0.999: terms fall %s, rise after the fall %s (last ratio %.3e; the "
              "turning point 2k ~ 2 pi log x / log q ~ 4352 lies beyond k_max = 30)",
              fell ? "yes" : "no", rose_after_fall ? "yes" : "no", max_ratio);

  const double integral = modular::b_integral(0.999, 0.5, s);
  const double diff = std::abs(integral - series.partial_at_optimal().real());
  const bool sandwich_ok = diff <= 2.0 * series.optimal_error;
  detail_line("sandwich: |b_integral - partial| = %.3e vs 2 x optimal_error = %.3e "
              "(double resolution of the integral is ~%.1e)",
              diff, 2.0 * series.optimal_error, machine_eps * integral);

  const int k1 = modular::asymptotic_b_series(0.9, 0.5, 30).optimal_index;
  const int k2 = modular::asymptotic_b_series(0.99, 0.5, 30).optimal_index;
  const int k3 = series.optimal_index;
  const bool monotone_ok = (k1 <= k2) && (k2 <= k3);
  detail_line("optimal_index over q = {0.9, 0.99, 0.999}: %d, %d, %d; %.3f s", k1, k2, k3,
              timer.seconds());

  return shape_ok && sandwich_ok && monotone_ok;
}

// 10. Independence discipline: a 1e-6 perturbation injected into the
// infinite product must break the product-route identities and leave the
// purely scalar ones untouched.
bool criterion_10() {
  Timer timer;
  qseries::testing::pochhammer_inf_perturbation = 1e-6;

  bool euler_failed = false;
  for (const double qm : {0.3, 0.6, 0.9})
    for (const double xm : {0.5, 1.0, 1.5}) {
      const auto rep = verify::verify(
          Identity::EULER,
          {{"x", std::polar(xm, 1.3 * xm)}, {"q", std::polar(qm, 0.7 * qm)}});
      if (!rep.skipped && !rep.pass) euler_failed = true;
    }
  const auto xq =
      verify::verify(Identity::XQMAIN, {{"tau", Complex{0.0, 1.0}}, {"xi", Complex{0.25, 0.0}}});
  const auto gplus =
      verify::verify(Identity::G_PLUS, {{"tau", Complex{0.0, 1.0}}, {"xi", Complex{0.3, 0.3}}});
  const auto landen = verify::verify(Identity::LANDEN, {{"x", Complex{0.35, 0.0}}});

  qseries::testing::pochhammer_inf_perturbation = 0.0;

  const bool xq_failed = !xq.skipped && !xq.pass;
  detail_line("perturbed: EULER broke %s, XQMAIN broke %s, G_PLUS passed %s, LANDEN "
              "passed %s, %.3f s",
              euler_failed ? "yes" : "no", xq_failed ? "yes" : "no",
              gplus.pass ? "yes" : "no", landen.pass ? "yes" : "no", timer.seconds());
  return euler_failed && xq_failed && gplus.pass && landen.pass;
}

struct Criterion {
  int number;
  const char* label;
  bool (*fn)();
};

const Criterion criteria[] = {
    {1, "EULER: series equals product, 25-point grid, rel_err <= 1e-11", criterion_1},
    {2, "MAIN: series representation on the (alpha, nu) grid, rel_err <= 1e-8", criterion_2},
    {3, "MAINTER: dilogarithm representation, 9 points, rel_err <= 1e-8", criterion_3},
    {4, "MP: Stieltjes term = log-product + contour, rel_err <= 1e-7", criterion_4},
    {5, "PP_SLICE: slice agreement 1e-9; ray/detour independence", criterion_5},
    {6, "STOKES: lateral jump equals the series, 9 points, 1e-9", criterion_6},
    {7, "XQMAIN: modular representation, 3x3 grid, rel_err <= 1e-8, offsets 0", criterion_7},
    {8, "ETA corollary 1e-10; THETA multiplier stable to 1e-9", criterion_8},
    {9, "ASYMPTOTIC: divergence shape, optimal-truncation sandwich, index growth",
     criterion_9},
    {10, "mutation: product perturbation breaks EULER/XQMAIN only", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) selected = std::atoi(argv[++i]);
    if (std::strcmp(argv[i], "--quiet") == 0) g_verbose = false;
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (selected != 0 && c.number != selected) continue;
    const bool ok = c.fn();
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", c.number, c.label);
    if (!ok) ++failures;
  }
  return failures;
}
