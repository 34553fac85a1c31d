#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qmod {

// Base class for every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument violated a mathematical precondition of the operation.
struct domain_error : error {
  using error::error;
};

// Malformed input: unknown names, unparsable literals, bad configuration.
// Distinct from domain_error so callers can tell user mistakes from
// out-of-domain parameter points.
struct usage_error : error {
  using error::error;
};

// The argument sits at (or numerically indistinguishable from) a pole.
struct pole_error : domain_error {
  using domain_error::domain_error;
};

// An integration path is geometrically inconsistent (detours overlap,
// a detour crosses the origin, ...).
struct geometry_error : domain_error {
  using domain_error::domain_error;
};

// The integrand fails to decay along an unbounded path.
struct divergence_error : domain_error {
  using domain_error::domain_error;
};

// The requested accuracy could not be certified. Carries the best estimate
// produced before giving up.
struct accuracy_error : error {
  std::complex<double> best_estimate{0.0, 0.0};
  double error_estimate = 0.0;

  explicit accuracy_error(const std::string& what) : error(what) {}
  accuracy_error(const std::string& what, std::complex<double> best, double err)
      : error(what), best_estimate(best), error_estimate(err) {}
};

}  // namespace qmod
