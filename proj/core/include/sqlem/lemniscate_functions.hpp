#pragma once

// The special functions attached to the two curves: the lemniscate
// constant, the lemniscate sine and cosine sl/cl, the hyperbolic
// lemniscate sine slh, and the squigonometric functions cos4/sin4/tan4.
// Each is defined by inverting one of the arc-length/area integrals from
// sqlem/curves.hpp with the safeguarded Newton solver; no series or
// AGM-based fast paths are used, so every value traces back to the same
// quadrature kernel the verification layer exercises.

#include "sqlem/curves.hpp"
#include "sqlem/numerics.hpp"

namespace sqlem {

/// The three headline constants, all derived from the cached varpi().
struct Constants {
  double varpi;          // lemniscate constant: arc length of one lobe
  double gamma_quarter;  // gamma(1/4)
  double squircle_area;  // total area enclosed by x^4+y^4=1: sqrt(2)*varpi
};

/// The lemniscate constant varpi = 2 * integral_0^1 dr/sqrt(1-r^4).
/// Computed once on first use and cached (thread-safe initialization);
/// every module reads this same value so cross-module identities stay
/// bit-consistent.
double varpi();

/// Convenience bundle of varpi, gamma(1/4) and the squircle area.
Constants constants();

/// Lemniscate sine on the core domain u in [0, varpi/2]: the inverse of
/// u = integral_0^s dr/sqrt(1-r^4). Increasing from 0 to 1, and the
/// returned s reproduces u through the defining integral to 1e-12.
double sl(double u, ToleranceConfig tol = {});

/// Lemniscate cosine on [0, varpi/2], via the reflection cl(u) =
/// sl(varpi/2 - u): arc length measured from the vertex instead of the
/// origin. Decreasing from 1 to 0.
double cl(double u, ToleranceConfig tol = {});

/// sl extended to the whole real line by odd symmetry, the reflection
/// sl(varpi - u) = sl(u), and 2*varpi periodicity.
double extend_sl(double u, ToleranceConfig tol = {});

/// cl extended to the whole real line: extend_sl(varpi/2 - u).
double extend_cl(double u, ToleranceConfig tol = {});

/// Hyperbolic lemniscate sine: the inverse of t = integral_0^s
/// dv/sqrt(1+v^4). Diverges as t -> varpi/sqrt(2), so arguments must stay
/// below that limit by the configurable guard (default 1e-6). Past the
/// half-way point the exact reciprocal symmetry
/// slh(t) = 1/slh(varpi/sqrt(2) - t) is used instead of inverting the
/// integral at a huge bracket.
double slh(double t, double guard_delta = 1e-6, ToleranceConfig tol = {});

/// Squigonometric cosine/sine: coordinates of the unique first-quadrant
/// point of x^4+y^4=1 whose swept sector area from the positive x-axis is
/// t/2, for t in [0, varpi/sqrt(2)]. In the first octant tan(alpha) =
/// slh(t) recovers the direction; past the midpoint the x<->y symmetry
/// cos4(t) = sin4(varpi/sqrt(2) - t) avoids slh's divergence entirely.
double cos4(double t, ToleranceConfig tol = {});
double sin4(double t, ToleranceConfig tol = {});

/// tan4(t) = sin4(t)/cos4(t) on [0, varpi/sqrt(2)); equals slh(t).
double tan4(double t, ToleranceConfig tol = {});

/// Right-hand side of the cl duplication formula evaluated from cl(u):
/// (-1 + 2 cl^2 u + cl^4 u) / (1 + 2 cl^2 u - cl^4 u), a consistency
/// check against the direct extend_cl(2u).
double cl_duplication(double u, ToleranceConfig tol = {});

}  // namespace sqlem
