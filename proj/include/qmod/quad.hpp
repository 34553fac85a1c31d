#pragma once

// Integration machinery: globally adaptive Gauss-Kronrod segments with error
// estimates, rays to infinity with geometric panels, the Cauchy principal
// value across the simple pole at t = 1, and the detoured half-line with
// semicircular arcs around listed real poles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <utility>
#include <variant>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/special.hpp"

namespace qmod::quad {

struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 60;                   // bisection depth limit per panel
  double ray_panel_growth = 2.0;        // geometric growth of ray panels
  double ray_cutoff_magnitude = 1e-18;  // a panel below this ends the ray
  double pv_window = 0.5;               // half-width of the symmetric window at t = 1

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw domain_error("QuadratureSettings: tolerances must be positive");
    if (max_depth < 10) throw domain_error("QuadratureSettings: max_depth must be >= 10");
    if (!(ray_panel_growth > 1.0))
      throw domain_error("QuadratureSettings: ray_panel_growth must exceed 1");
    if (!(ray_cutoff_magnitude > 0.0))
      throw domain_error("QuadratureSettings: ray_cutoff_magnitude must be positive");
    if (!(pv_window > 0.0 && pv_window < 1.0))
      throw domain_error("QuadratureSettings: pv_window must lie in (0, 1)");
  }
};

enum class DetourSide { below, above };  // below = arcs dip into the lower half-plane

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss estimate (QUADPACK dqk15).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  Complex value;
  double error;
  double round_floor;
};

template <class F>
PanelEstimate gk15(F&& f, Complex a, Complex b) {
  const Complex mid = 0.5 * (a + b);
  const Complex half = 0.5 * (b - a);
  const double scale = std::abs(half);

  Complex fv[15];
  fv[14] = f(mid);
  Complex resk = gk_wk[7] * fv[14];
  Complex resg = gk_wg[3] * fv[14];
  double resabs = gk_wk[7] * std::abs(fv[14]);
  for (int j = 0; j < 7; ++j) {
    const Complex f1 = f(mid - gk_nodes[j] * half);
    const Complex f2 = f(mid + gk_nodes[j] * half);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    resk += gk_wk[j] * (f1 + f2);
    resabs += gk_wk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += gk_wg[(j - 1) / 2] * (f1 + f2);
  }
  const Complex reskh = 0.5 * resk;
  double resasc = gk_wk[7] * std::abs(fv[14] - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += gk_wk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));

  const Complex value = resk * half;
  double err = std::abs((resk - resg) * half);
  resasc *= scale;
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double round_floor = 50.0 * machine_eps * resabs * scale;
  err = std::max(err, round_floor);
  return {value, err, round_floor};
}

}  // namespace detail

// Adaptive integration of f along the straight segment [a, b]. Returns the
// value and a certified error estimate; throws accuracy_error (carrying the
// best estimate) when the subdivision limits are exhausted first.
template <class F>
std::pair<Complex, double> integrate_segment(F&& f, Complex a, Complex b,
                                             const QuadratureSettings& s = {}) {
  s.validate();
  if (a == b) return {Complex{0.0, 0.0}, 0.0};

  struct Panel {
    Complex a, b, value;
    double error;
    double round_floor;
    int depth;
  };
  auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

  auto make = [&](Complex pa, Complex pb, int depth) {
    const auto r = detail::gk15(f, pa, pb);
    return Panel{pa, pb, r.value, r.error, r.round_floor, depth};
  };

  Panel whole = make(a, b, 0);
  Complex total = whole.value;
  double err_total = whole.error;
  heap.push(whole);

  std::size_t n_panels = 1;
  while (err_total > std::max(s.abs_tol, s.rel_tol * std::abs(total))) {
    const Panel worst = heap.top();
    if (worst.error <= 1.0001 * worst.round_floor) break;  // at the roundoff floor
    heap.pop();
    if (worst.depth >= s.max_depth)
      throw accuracy_error("integrate_segment: bisection depth exhausted", total, err_total);
    if (n_panels > 20000)
      throw accuracy_error("integrate_segment: panel budget exhausted", total, err_total);
    const Complex mid = 0.5 * (worst.a + worst.b);
    const Panel left = make(worst.a, mid, worst.depth + 1);
    const Panel right = make(mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    err_total += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n_panels;
  }
  return {total, err_total};
}

// Integration along the half-line from the origin with argument d. Panels
// [0,1], [1,g], [g,g^2], ...; stops when a panel (value plus its error)
// falls below ray_cutoff_magnitude. Three consecutive panels whose mean
// magnitude fails to shrink signal a non-decaying integrand (the mean
// discounts the geometric growth of the panel lengths).
template <class F>
Complex integrate_ray(F&& f, double d, const QuadratureSettings& s = {}) {
  s.validate();
  if (!(d > -pi && d < pi)) throw domain_error("integrate_ray: direction must lie in (-pi, pi)");
  const Complex dir = std::polar(1.0, d);

  QuadratureSettings ps = s;
  ps.abs_tol = s.abs_tol / 8.0;
  ps.rel_tol = s.rel_tol / 8.0;

  Complex total{0.0, 0.0};
  double prev_mean = std::numeric_limits<double>::infinity();
  int non_shrinking = 0;
  double lo = 0.0, hi = 1.0;
  for (int panel = 0; panel < 700; ++panel) {
    const auto [val, err] = integrate_segment(f, lo * dir, hi * dir, ps);
    total += val;
    const double mag = std::abs(val) + err;
    if (mag < s.ray_cutoff_magnitude) return total;
    const double mean = mag / (hi - lo);
    if (mean >= prev_mean) {
      if (++non_shrinking >= 3)
        throw divergence_error("integrate_ray: integrand does not decay along the ray");
    } else {
      non_shrinking = 0;
    }
    prev_mean = mean;
    lo = hi;
    hi *= s.ray_panel_growth;
  }
  throw accuracy_error("integrate_ray: panel budget exhausted", total, prev_mean);
}

// Cauchy principal value of int_0^inf f(t)/(1 - t^2) dt across the simple
// pole at t = 1. Split at 1 -+ h (h = pv_window); the middle part is the
// symmetric pairing int_0^h [g(1-u) + g(1+u)] du, finite by construction;
// the tail runs through integrate_ray.
template <class F>
Complex pv_integral_unit(F&& f, const QuadratureSettings& s = {}) {
  s.validate();
  const double h = s.pv_window;
  const Complex f_at_pole = f(Complex{1.0, 0.0});
  if (!std::isfinite(f_at_pole.real()) || !std::isfinite(f_at_pole.imag()))
    throw domain_error("pv_integral_unit: integrand must be smooth at t = 1");

  auto g = [&f](Complex t) { return f(t) / (1.0 - t * t); };
  auto paired = [&f](Complex u) {
    return (f(1.0 - u) / (2.0 - u) - f(1.0 + u) / (2.0 + u)) / u;
  };

  const auto [left, el] = integrate_segment(g, Complex{0.0, 0.0}, Complex{1.0 - h, 0.0}, s);
  const auto [mid, em] = integrate_segment(paired, Complex{0.0, 0.0}, Complex{h, 0.0}, s);
  const Complex tail = integrate_ray([&](Complex u) { return g(1.0 + h + u); }, 0.0, s);
  (void)el;
  (void)em;
  return left + mid + tail;
}

namespace detail {

template <class F>
Complex detour_arc(F&& f, double pole, double r, DetourSide side, const QuadratureSettings& s) {
  // Arc from pole - r to pole + r; theta runs pi -> 2 pi below, pi -> 0 above.
  const double theta_end = (side == DetourSide::below) ? two_pi : 0.0;
  auto arc = [&](Complex theta) {
    const Complex point = pole + r * std::exp(imag_unit * theta);
    return f(point) * (imag_unit * r * std::exp(imag_unit * theta));
  };
  return integrate_segment(arc, Complex{pi, 0.0}, Complex{theta_end, 0.0}, s).first;
}

}  // namespace detail

// Integration along the positive real axis with semicircular detours of
// radius r below (DetourSide::below) or above each listed pole. Walks the
// pole list until the contributions of a full period fall below
// ray_cutoff_magnitude.
template <class F>
Complex contour_ell(F&& f, double r, const std::vector<double>& poles, DetourSide side,
                    const QuadratureSettings& s = {}) {
  s.validate();
  if (poles.empty()) throw geometry_error("contour_ell: pole list is empty");
  if (!(r > 0.0)) throw geometry_error("contour_ell: detour radius must be positive");
  if (poles.front() - r <= 0.0)
    throw geometry_error("contour_ell: first detour would cross the origin");
  for (std::size_t i = 0; i + 1 < poles.size(); ++i) {
    if (!(poles[i + 1] > poles[i]))
      throw geometry_error("contour_ell: poles must be strictly increasing");
    if (poles[i + 1] - poles[i] <= 2.0 * r)
      throw geometry_error("contour_ell: pole spacing must exceed the detour diameter");
  }

  Complex total{0.0, 0.0};
  double mark = 0.0;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const auto [seg, seg_err] =
        integrate_segment(f, Complex{mark, 0.0}, Complex{poles[i] - r, 0.0}, s);
    const Complex arc = detail::detour_arc(f, poles[i], r, side, s);
    total += seg + arc;
    mark = poles[i] + r;
    if (i >= 1 && std::abs(seg) + std::abs(arc) + seg_err < s.ray_cutoff_magnitude)
      return total;
  }
  throw accuracy_error(
      "contour_ell: pole list exhausted before the contributions fell below the cutoff", total,
      0.0);
}

// Declarative path description; dispatches onto the integrators above.
struct SegmentPath {
  Complex a, b;
};
struct RayPath {
  double direction = 0.0;
};
struct DetouredHalfLinePath {
  double detour_radius = 0.0;
  DetourSide side = DetourSide::below;
  std::vector<double> poles;
};
using PathSpec = std::variant<SegmentPath, RayPath, DetouredHalfLinePath>;

template <class F>
Complex integrate(F&& f, const PathSpec& path, const QuadratureSettings& s = {}) {
  return std::visit(
      [&](const auto& p) -> Complex {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SegmentPath>) {
          return integrate_segment(f, p.a, p.b, s).first;
        } else if constexpr (std::is_same_v<P, RayPath>) {
          return integrate_ray(f, p.direction, s);
        } else {
          return contour_ell(f, p.detour_radius, p.poles, p.side, s);
        }
      },
      path);
}

}  // namespace qmod::quad
