#pragma once

// The verification engine. Every identity the library claims is packaged
// as a residual function (left side minus right side, absolute magnitude
// O(1)), sampled over a grid, and summarized in an IdentityReport with the
// maximum absolute residual and where it occurred. Residuals are absolute,
// not relative: each identity compares lengths or areas of order one.
//
// Each verifier accepts a `residual_offset` that is added to every signed
// residual before taking magnitudes. It exists purely as a test hook: a
// systematic offset of 1e-6 must flip exactly the targeted report to fail.

#include <string>
#include <vector>

#include "sqlem/numerics.hpp"

namespace sqlem {

/// Evenly spaced sample grid with both endpoints pulled inward by
/// endpoint_inset (default 1e-6), keeping samples clear of guarded domain
/// boundaries. Points are lo+inset + k*((hi-inset)-(lo+inset))/(n-1).
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;
  double endpoint_inset = 1e-6;
};

/// Outcome of one verifier run; pass is exactly max_abs_residual <= tolerance
/// and argmax is the grid point where the maximum was attained (ties break
/// toward the smallest grid index).
struct IdentityReport {
  std::string name;
  GridSpec grid;
  double max_abs_residual;
  double argmax;
  double tolerance;
  bool pass;
  long long samples;
};

/// Materialize the sample points of a grid; throws DomainError when n < 2
/// or the inset endpoints cross.
std::vector<double> grid_points(const GridSpec& grid);

// Per-point residuals, callable at any admissible argument (in particular
// at the exact trivial configurations the inset grids skip).

/// l(beta(alpha)) - 2*sqrt(2)*a(alpha): the arc-length/sector-area relation
/// over alpha in [0, pi/4].
double theorem1_residual(double alpha, ToleranceConfig tol = {});

/// Radial form of the same relation driven by R = OB in [0, 1]:
/// arc(0, OD(R)) - 2*sqrt(2)*a(arctan T(R)).
double theorem2_residual(double R, ToleranceConfig tol = {});

/// Integral relation integral_0^{R(T)} dr/sqrt(1-r^4) =
/// sqrt(2) * integral_0^T dt/sqrt(1+t^4) with R(T) = sqrt(2)T/sqrt(1+T^4).
double siegel_residual(double T, ToleranceConfig tol = {});

/// Equality of the theta-parametrized arc from the vertex and the
/// r-parametrized arc from the origin for the same configuration alpha.
double arc_equality_residual(double alpha, ToleranceConfig tol = {});

/// cl(sqrt(2) t) - (cos4^2 - sin4^2)/(cos4^2 + sin4^2) on [0, varpi/(2 sqrt 2)].
double squig_relation_residual(double t, ToleranceConfig tol = {});

/// tan4^2(sqrt(2) u) - (1 - cl 2u)/(1 + cl 2u) for u in [0, varpi/4].
double tan4_relation_residual(double u, ToleranceConfig tol = {});

/// slh(sqrt(2) u) - sl(u)(1 + cl^2 u)/(sqrt(2) cl(u)) for u in (0, varpi/2).
double slh_relation_residual(double u, ToleranceConfig tol = {});

/// cl^2 + sl^2 + cl^2 sl^2 - 1 on [0, varpi/2].
double pythagorean_residual(double u, ToleranceConfig tol = {});

/// cl_duplication(u) - extend_cl(2u).
double duplication_residual(double u, ToleranceConfig tol = {});

/// integral_{R^2}^1 dr/sqrt(1-r^4) - sqrt(2) integral_0^{T(R)} dv/sqrt(1+v^4)
/// with T(R) = sqrt((1-R^2)/(1+R^2)), for R in [0, 1].
double final_remark_residual(double R, ToleranceConfig tol = {});

// Grid-based verifiers. Each checks its grid against the documented domain,
// evaluates the residual per sample (quadrature failures are recorded as an
// infinite residual for that sample, never aborting the run), and reports.

IdentityReport verify_theorem1(GridSpec grid, double tol,
                               double residual_offset = 0.0,
                               ToleranceConfig quad_tol = {});
IdentityReport verify_theorem2(GridSpec grid, double tol,
                               double residual_offset = 0.0,
                               ToleranceConfig quad_tol = {});
IdentityReport verify_siegel(GridSpec grid, double tol,
                             double residual_offset = 0.0,
                             ToleranceConfig quad_tol = {});
IdentityReport verify_arc_equality(GridSpec grid, double tol,
                                   double residual_offset = 0.0,
                                   ToleranceConfig quad_tol = {});
IdentityReport verify_squig_relation(GridSpec grid, double tol,
                                     double residual_offset = 0.0,
                                     ToleranceConfig quad_tol = {});
IdentityReport verify_tan4_relation(GridSpec grid, double tol,
                                    double residual_offset = 0.0,
                                    ToleranceConfig quad_tol = {});
IdentityReport verify_slh_relation(GridSpec grid, double tol,
                                   double residual_offset = 0.0,
                                   ToleranceConfig quad_tol = {});
IdentityReport verify_pythagorean(GridSpec grid, double tol,
                                  double residual_offset = 0.0,
                                  ToleranceConfig quad_tol = {});
IdentityReport verify_duplication(GridSpec grid, double tol,
                                  double residual_offset = 0.0,
                                  ToleranceConfig quad_tol = {});
IdentityReport verify_final_remark(GridSpec grid, double tol,
                                   double residual_offset = 0.0,
                                   ToleranceConfig quad_tol = {});

/// Three-way agreement of the classical constant: Q1 = integral_0^1
/// dx/sqrt(1-x^4), Q2 = gamma(1/4)^2/(4 sqrt(2 pi)), Q3 = sqrt(2) *
/// integral_0^1 (1-x^4)^(1/4) dx. The report's three samples index the
/// pairwise residuals |Q1-Q2|, |Q2-Q3|, |Q1-Q3|.
IdentityReport verify_historic(double tol, double residual_offset = 0.0,
                               ToleranceConfig quad_tol = {});

/// Squircle area three ways: 8 * sector(pi/4), 4 * integral_0^1
/// (1-x^4)^(1/4) dx, and sqrt(2)*varpi; same pairwise layout as above.
IdentityReport verify_area_corollary(double tol, double residual_offset = 0.0,
                                     ToleranceConfig quad_tol = {});

/// Run one verifier by name with its default grid (throws DomainError for
/// an unknown name). n_override > 0 replaces the default sample count.
IdentityReport verify_one(const std::string& name, double tol,
                          int n_override = 0, double residual_offset = 0.0);

/// Run every verifier with default grids (257 samples for the alpha/R/T
/// grids, 128 for the function-domain grids), ordered by name. Never aborts
/// on a failing report. perturb_name/perturb_offset forward the test hook
/// to exactly one verifier.
std::vector<IdentityReport> verify_all(double tol, int n_override = 0,
                                       const std::string& perturb_name = {},
                                       double perturb_offset = 0.0);

/// The twelve verifier names, in the (lexicographic) order verify_all uses.
const std::vector<std::string>& verifier_names();

}  // namespace sqlem
