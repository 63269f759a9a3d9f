#include "sqlem/relations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include "sqlem/curves.hpp"
#include "sqlem/lemniscate_functions.hpp"

namespace sqlem {

namespace {

constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
constexpr double kPi = 3.141592653589793238462643383279502884;

/// integral_0^T dt/sqrt(1+t^4); the integrand is smooth on [0, T].
double quartic_arc(double T, ToleranceConfig tol) {
  if (T == 0.0) {
    return 0.0;
  }
  auto f = [](double t) {
    const double t2 = t * t;
    return 1.0 / std::sqrt(1.0 + t2 * t2);
  };
  return integrate(f, {0.0, T}, tol).value;
}

/// integral_0^1 (1-x^4)^(1/4) dx; smooth (the quartic root vanishes gently).
double quartic_flat_arc(ToleranceConfig tol) {
  auto f = [](double x, double xc) {
    // Near x = 1 evaluate 1-x^4 from the endpoint distance: xc < 0 holds
    // x - 1 exactly, so 1-x^4 = -xc*(1+x)(1+x^2) loses nothing.
    const double x2 = x * x;
    const double one_minus_x4 =
        xc < 0.0 ? -xc * (1.0 + x) * (1.0 + x2) : (1.0 - x2) * (1.0 + x2);
    return std::pow(one_minus_x4, 0.25);
  };
  return integrate(f, {0.0, 1.0}, tol).value;
}

/// Evaluate one residual over a grid, aggregating into a report. A sample
/// whose evaluation throws (quadrature non-convergence, domain edge) is
/// recorded as an infinite residual rather than aborting the sweep.
template <class R>
IdentityReport run_grid(const char* name, const GridSpec& grid, double tol,
                        double residual_offset, R&& residual) {
  const std::vector<double> points = grid_points(grid);
  double max_abs = -1.0;
  double argmax = points.front();
  for (const double x : points) {
    double r;
    try {
      r = residual(x) + residual_offset;
    } catch (const NonConvergence&) {
      r = std::numeric_limits<double>::infinity();
    } catch (const DomainError&) {
      r = std::numeric_limits<double>::infinity();
    }
    const double mag = std::fabs(r);
    if (mag > max_abs) {
      max_abs = mag;
      argmax = x;
    }
  }
  IdentityReport report;
  report.name = name;
  report.grid = grid;
  report.max_abs_residual = max_abs;
  report.argmax = argmax;
  report.tolerance = tol;
  report.pass = max_abs <= tol;
  report.samples = static_cast<long long>(points.size());
  return report;
}

/// Shared shape for the two three-way constant checks: the "grid" indexes
/// the pairwise differences v0-v1, v1-v2, v0-v2.
IdentityReport pairwise_report(const char* name, double v0, double v1,
                               double v2, double tol, double residual_offset) {
  const GridSpec grid{0.0, 2.0, 3, 0.0};
  const double diffs[3] = {v0 - v1, v1 - v2, v0 - v2};
  double max_abs = -1.0;
  double argmax = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double mag = std::fabs(diffs[i] + residual_offset);
    if (mag > max_abs) {
      max_abs = mag;
      argmax = static_cast<double>(i);
    }
  }
  IdentityReport report;
  report.name = name;
  report.grid = grid;
  report.max_abs_residual = max_abs;
  report.argmax = argmax;
  report.tolerance = tol;
  report.pass = max_abs <= tol;
  report.samples = 3;
  return report;
}

void check_grid_domain(const char* name, const GridSpec& grid, double lo,
                       double hi) {
  if (!(grid.lo >= lo) || !(grid.hi <= hi)) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "%s: grid [%.17g, %.17g] outside [%.17g, %.17g]", name,
                  grid.lo, grid.hi, lo, hi);
    throw DomainError(msg);
  }
}

}  // namespace

std::vector<double> grid_points(const GridSpec& grid) {
  if (grid.n < 2) {
    throw DomainError("grid_points: n must be at least 2");
  }
  const double lo = grid.lo + grid.endpoint_inset;
  const double hi = grid.hi - grid.endpoint_inset;
  if (!(lo < hi)) {
    throw DomainError("grid_points: inset endpoints cross");
  }
  std::vector<double> points(static_cast<std::size_t>(grid.n));
  const double step = (hi - lo) / static_cast<double>(grid.n - 1);
  for (int k = 0; k < grid.n; ++k) {
    points[static_cast<std::size_t>(k)] = lo + step * static_cast<double>(k);
  }
  points.back() = hi;
  return points;
}

double theorem1_residual(double alpha, ToleranceConfig tol) {
  const double arc = lemniscate_arc_theta(0.0, beta_of_alpha(alpha), tol);
  const double area = squircle_sector_area(alpha, tol);
  return arc - 2.0 * kSqrt2 * area;
}

double theorem2_residual(double R, ToleranceConfig tol) {
  const double arc = lemniscate_arc_radial(0.0, d_of_b(R), tol);
  const double alpha = std::atan(tan_alpha_of_R(R));
  return arc - 2.0 * kSqrt2 * squircle_sector_area(alpha, tol);
}

double siegel_residual(double T, ToleranceConfig tol) {
  const double arc = lemniscate_arc_radial(0.0, siegel_R_of_T(T), tol);
  return arc - kSqrt2 * quartic_arc(T, tol);
}

double arc_equality_residual(double alpha, ToleranceConfig tol) {
  const double OB = lemniscate_r(alpha);
  const double l1 = lemniscate_arc_radial(0.0, d_of_b(OB), tol);
  const double l2 = lemniscate_arc_theta(0.0, beta_of_alpha(alpha), tol);
  return l1 - l2;
}

double squig_relation_residual(double t, ToleranceConfig tol) {
  const double c = cos4(t, tol);
  const double s = sin4(t, tol);
  const double c2 = c * c;
  const double s2 = s * s;
  return extend_cl(kSqrt2 * t, tol) - (c2 - s2) / (c2 + s2);
}

double tan4_relation_residual(double u, ToleranceConfig tol) {
  const double t = tan4(kSqrt2 * u, tol);
  const double c = extend_cl(2.0 * u, tol);
  return t * t - (1.0 - c) / (1.0 + c);
}

double slh_relation_residual(double u, ToleranceConfig tol) {
  const double s = sl(u, tol);
  const double c = cl(u, tol);
  return slh(kSqrt2 * u, 1e-6, tol) - s * (1.0 + c * c) / (kSqrt2 * c);
}

double pythagorean_residual(double u, ToleranceConfig tol) {
  const double s = extend_sl(u, tol);
  const double c = extend_cl(u, tol);
  const double s2 = s * s;
  const double c2 = c * c;
  return c2 + s2 + c2 * s2 - 1.0;
}

double duplication_residual(double u, ToleranceConfig tol) {
  return cl_duplication(u, tol) - extend_cl(2.0 * u, tol);
}

double final_remark_residual(double R, ToleranceConfig tol) {
  const double arc = lemniscate_arc_radial(R * R, 1.0, tol);
  return arc - kSqrt2 * quartic_arc(tan_alpha_of_R(R), tol);
}

IdentityReport verify_theorem1(GridSpec grid, double tol,
                               double residual_offset,
                               ToleranceConfig quad_tol) {
  check_grid_domain("verify_theorem1", grid, 0.0, quarter_pi);
  return run_grid("theorem1", grid, tol, residual_offset, [&](double alpha) {
    return theorem1_residual(alpha, quad_tol);
  });
}

IdentityReport verify_theorem2(GridSpec grid, double tol,
                               double residual_offset,
                               ToleranceConfig quad_tol) {
  check_grid_domain("verify_theorem2", grid, 0.0, 1.0);
  return run_grid("theorem2", grid, tol, residual_offset,
                  [&](double R) { return theorem2_residual(R, quad_tol); });
}

IdentityReport verify_siegel(GridSpec grid, double tol, double residual_offset,
                             ToleranceConfig quad_tol) {
  check_grid_domain("verify_siegel", grid, 0.0,
                    std::numeric_limits<double>::infinity());
  return run_grid("siegel", grid, tol, residual_offset,
                  [&](double T) { return siegel_residual(T, quad_tol); });
}

IdentityReport verify_arc_equality(GridSpec grid, double tol,
                                   double residual_offset,
                                   ToleranceConfig quad_tol) {
  check_grid_domain("verify_arc_equality", grid, 0.0, quarter_pi);
  return run_grid("arc_equality", grid, tol, residual_offset,
                  [&](double alpha) {
                    return arc_equality_residual(alpha, quad_tol);
                  });
}

IdentityReport verify_squig_relation(GridSpec grid, double tol,
                                     double residual_offset,
                                     ToleranceConfig quad_tol) {
  check_grid_domain("verify_squig_relation", grid, 0.0,
                    varpi() / (2.0 * kSqrt2));
  return run_grid("squig_relation", grid, tol, residual_offset, [&](double t) {
    return squig_relation_residual(t, quad_tol);
  });
}

IdentityReport verify_tan4_relation(GridSpec grid, double tol,
                                    double residual_offset,
                                    ToleranceConfig quad_tol) {
  check_grid_domain("verify_tan4_relation", grid, 0.0, varpi() / 4.0);
  return run_grid("tan4_relation", grid, tol, residual_offset, [&](double u) {
    return tan4_relation_residual(u, quad_tol);
  });
}

IdentityReport verify_slh_relation(GridSpec grid, double tol,
                                   double residual_offset,
                                   ToleranceConfig quad_tol) {
  check_grid_domain("verify_slh_relation", grid, 0.0, varpi() / 2.0);
  return run_grid("slh_relation", grid, tol, residual_offset, [&](double u) {
    return slh_relation_residual(u, quad_tol);
  });
}

IdentityReport verify_pythagorean(GridSpec grid, double tol,
                                  double residual_offset,
                                  ToleranceConfig quad_tol) {
  return run_grid("pythagorean", grid, tol, residual_offset, [&](double u) {
    return pythagorean_residual(u, quad_tol);
  });
}

IdentityReport verify_duplication(GridSpec grid, double tol,
                                  double residual_offset,
                                  ToleranceConfig quad_tol) {
  return run_grid("duplication", grid, tol, residual_offset, [&](double u) {
    return duplication_residual(u, quad_tol);
  });
}

IdentityReport verify_final_remark(GridSpec grid, double tol,
                                   double residual_offset,
                                   ToleranceConfig quad_tol) {
  check_grid_domain("verify_final_remark", grid, 0.0, 1.0);
  return run_grid("final_remark", grid, tol, residual_offset, [&](double R) {
    return final_remark_residual(R, quad_tol);
  });
}

IdentityReport verify_historic(double tol, double residual_offset,
                               ToleranceConfig quad_tol) {
  auto lemniscatic = [](double r, double rc) {
    const double r2 = r * r;
    const double one_minus_r = rc < 0.0 ? -rc : 1.0 - r;
    return 1.0 / std::sqrt(one_minus_r * (1.0 + r) * (1.0 + r2));
  };
  const double q1 = integrate(lemniscatic, {0.0, 1.0}, quad_tol).value;
  const double g = gamma(0.25);
  const double q2 = g * g / (4.0 * std::sqrt(2.0 * kPi));
  const double q3 = kSqrt2 * quartic_flat_arc(quad_tol);
  return pairwise_report("historic", q1, q2, q3, tol, residual_offset);
}

IdentityReport verify_area_corollary(double tol, double residual_offset,
                                     ToleranceConfig quad_tol) {
  const double a1 = 8.0 * squircle_sector_area(quarter_pi, quad_tol);
  const double a2 = 4.0 * quartic_flat_arc(quad_tol);
  const double a3 = kSqrt2 * varpi();
  return pairwise_report("area_corollary", a1, a2, a3, tol, residual_offset);
}

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names = {
      "arc_equality", "area_corollary", "duplication",  "final_remark",
      "historic",     "pythagorean",    "siegel",       "slh_relation",
      "squig_relation", "tan4_relation", "theorem1",    "theorem2"};
  return names;
}

namespace {

IdentityReport dispatch(const std::string& name, double tol, int n_override,
                        double residual_offset) {
  const double w = varpi();
  auto grid = [&](double lo, double hi, int n) {
    GridSpec g{lo, hi, n, 1e-6};
    if (n_override > 0) {
      g.n = n_override;
    }
    return g;
  };
  if (name == "arc_equality") {
    return verify_arc_equality(grid(0.0, quarter_pi, 257), tol,
                               residual_offset);
  }
  if (name == "area_corollary") {
    return verify_area_corollary(tol, residual_offset);
  }
  if (name == "duplication") {
    return verify_duplication(grid(0.0, 0.5 * w - 0.01, 128), tol,
                              residual_offset);
  }
  if (name == "final_remark") {
    return verify_final_remark(grid(0.0, 1.0, 257), tol, residual_offset);
  }
  if (name == "historic") {
    return verify_historic(tol, residual_offset);
  }
  if (name == "pythagorean") {
    return verify_pythagorean(grid(0.0, 0.5 * w, 128), tol, residual_offset);
  }
  if (name == "siegel") {
    return verify_siegel(grid(0.0, 1.0, 257), tol, residual_offset);
  }
  if (name == "slh_relation") {
    return verify_slh_relation(grid(0.0, 0.5 * w - 0.05, 128), tol,
                               residual_offset);
  }
  if (name == "squig_relation") {
    return verify_squig_relation(grid(0.0, w / (2.0 * kSqrt2), 128), tol,
                                 residual_offset);
  }
  if (name == "tan4_relation") {
    return verify_tan4_relation(grid(0.0, 0.25 * w, 128), tol,
                                residual_offset);
  }
  if (name == "theorem1") {
    return verify_theorem1(grid(0.0, quarter_pi, 257), tol, residual_offset);
  }
  if (name == "theorem2") {
    return verify_theorem2(grid(0.0, 1.0, 257), tol, residual_offset);
  }
  throw DomainError("verify: unknown identity \"" + name + "\"");
}

}  // namespace

IdentityReport verify_one(const std::string& name, double tol, int n_override,
                          double residual_offset) {
  return dispatch(name, tol, n_override, residual_offset);
}

std::vector<IdentityReport> verify_all(double tol, int n_override,
                                       const std::string& perturb_name,
                                       double perturb_offset) {
  std::vector<IdentityReport> reports;
  reports.reserve(verifier_names().size());
  for (const std::string& name : verifier_names()) {
    const double offset = name == perturb_name ? perturb_offset : 0.0;
    reports.push_back(dispatch(name, tol, n_override, offset));
  }
  return reports;
}

}  // namespace sqlem
