#include "sqlem/lemniscate_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace sqlem {

namespace {

constexpr double kSqrt2 = 1.414213562373095048801688724209698;

// Newton target for the inversions: well below the quadrature tolerance so
// that re-evaluating the defining integral at the returned point lands back
// on the argument to full advertised accuracy.
double root_tol(const ToleranceConfig& tol) {
  return std::min(0.5 * tol.abs_tol, 1e-13);
}

[[noreturn]] void throw_interval(const char* op, const char* var, double lo,
                                 double hi) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %s outside [%.17g, %.17g]", op, var, lo,
                hi);
  throw DomainError(buf);
}

// Integrand of the slh / squigonometric kernel; smooth and bounded by 1
// everywhere, so no endpoint-distance form is needed.
double quartic_fall(double v) {
  const double v2 = v * v;
  return 1.0 / std::sqrt(1.0 + v2 * v2);
}

double slh_kernel_integral(double s, const ToleranceConfig& tol) {
  return integrate(quartic_fall, {0.0, s}, tol).value;
}

CartesianPoint squig_point(double t, const ToleranceConfig& tol) {
  const double lim = varpi() / kSqrt2;
  if (!(t >= 0.0) || t > lim) throw_interval("cos4/sin4", "t", 0.0, lim);
  if (t == 0.0) return {1.0, 0.0};
  if (t == lim) return {0.0, 1.0};
  const double half = 0.5 * lim;
  if (t > half) {
    const CartesianPoint p = squig_point(lim - t, tol);
    return {p.y, p.x};
  }
  const double ta = slh(t, 1e-6, tol);  // tan(alpha) of the swept direction
  const double ta2 = ta * ta;
  const double q = std::pow(1.0 + ta2 * ta2, -0.25);
  return {q, ta * q};
}

}  // namespace

double varpi() {
  static const double value = 2.0 * lemniscate_arc_radial(0.0, 1.0);
  return value;
}

Constants constants() {
  return {varpi(), gamma(0.25), kSqrt2 * varpi()};
}

double sl(double u, ToleranceConfig tol) {
  const double half = 0.5 * varpi();
  if (!(u >= 0.0) || u > half) throw_interval("sl", "u", 0.0, half);
  if (u == 0.0) return 0.0;
  if (u == half) return 1.0;
  // Beyond the quarter period, invert the complementary arc instead: s is
  // the radius whose remaining arc length up to the apex r = 1 equals
  // half - u. Anchoring the integral at the singular endpoint keeps the
  // quadrature in the regime the node map is built for; solving the
  // origin-anchored integral near the half period would instead place the
  // singularity just outside the interval, where the error estimate (and
  // hence the Newton residual) degrades by several orders of magnitude.
  if (u > 0.5 * half) {
    const double eps = half - u;  // arc length remaining to the apex
    auto g = [&](double s) {
      return lemniscate_arc_radial(s, 1.0, tol) - eps;
    };
    auto dg = [](double s) {
      return -1.0 / std::sqrt((1.0 - s) * (1.0 + s) * (1.0 + s * s));
    };
    // The apex is flat (unit radius minus ~eps^2/2), so start just below it.
    const double guess =
        std::min(1.0 - 0.25 * eps * eps, std::nextafter(1.0, 0.0));
    return solve_monotone(g, dg, {0.5, 1.0}, root_tol(tol), 200, guess).root;
  }
  auto g = [&](double s) { return lemniscate_arc_radial(0.0, s, tol) - u; };
  auto dg = [](double s) {
    return 1.0 / std::sqrt((1.0 - s) * (1.0 + s) * (1.0 + s * s));
  };
  // Unit slope at the origin makes s = u a good starting point.
  return solve_monotone(g, dg, {0.0, 0.75}, root_tol(tol), 200, u).root;
}

double cl(double u, ToleranceConfig tol) {
  const double half = 0.5 * varpi();
  if (!(u >= 0.0) || u > half) throw_interval("cl", "u", 0.0, half);
  return sl(half - u, tol);
}

double extend_sl(double u, ToleranceConfig tol) {
  if (!std::isfinite(u)) throw DomainError("extend_sl: u must be finite");
  const double v = varpi();
  const double half = 0.5 * v;
  double m = std::remainder(u, 2.0 * v);  // exact; lands in [-varpi, varpi]
  if (m > half) m = v - m;
  if (m < -half) m = -v - m;
  return m >= 0.0 ? sl(m, tol) : -sl(-m, tol);
}

double extend_cl(double u, ToleranceConfig tol) {
  if (!std::isfinite(u)) throw DomainError("extend_cl: u must be finite");
  return extend_sl(0.5 * varpi() - u, tol);
}

double slh(double t, double guard_delta, ToleranceConfig tol) {
  if (!(guard_delta > 0.0)) {
    throw DomainError("slh: guard_delta must be positive");
  }
  const double lim = varpi() / kSqrt2;
  if (!(t >= 0.0) || t > lim - guard_delta) {
    throw_interval("slh", "t", 0.0, lim - guard_delta);
  }
  if (t == 0.0) return 0.0;
  const double half = 0.5 * lim;
  if (t > half) {
    // Reciprocal symmetry of the defining integral under v -> 1/v:
    // the two arguments t and lim - t have product-one values.
    return 1.0 / slh(lim - t, guard_delta, tol);
  }
  auto g = [&](double s) { return slh_kernel_integral(s, tol) - t; };
  // The bracket top sits just past s = 1, whose kernel integral is exactly
  // the half-way argument; the small margin absorbs quadrature rounding.
  return solve_monotone(g, quartic_fall, {0.0, 1.0 + 1e-6}, root_tol(tol), 200,
                        std::min(t, 0.999))
      .root;
}

double cos4(double t, ToleranceConfig tol) { return squig_point(t, tol).x; }

double sin4(double t, ToleranceConfig tol) { return squig_point(t, tol).y; }

double tan4(double t, ToleranceConfig tol) {
  const double lim = varpi() / kSqrt2;
  if (!(t >= 0.0) || t >= lim) {
    throw DomainError(
        "tan4: t outside [0, varpi/sqrt(2)); cos4 vanishes at the quadrant "
        "endpoint");
  }
  const CartesianPoint p = squig_point(t, tol);
  return p.y / p.x;
}

double cl_duplication(double u, ToleranceConfig tol) {
  const double c = extend_cl(u, tol);
  const double c2 = c * c;
  const double num = (2.0 + c2) * c2 - 1.0;
  const double den = 1.0 + (2.0 - c2) * c2;
  // For real arguments the denominator lives in [1, 2]; the guard honours
  // the documented contract all the same.
  if (std::abs(den) <= 1e-12) {
    throw DomainError("cl_duplication: denominator vanishes at this u");
  }
  return num / den;
}

}  // namespace sqlem
