#pragma once

// Geometry of the squircle x^4 + y^4 = 1 and the lemniscate
// (x^2+y^2)^2 = x^2 - y^2: polar and parametric forms, the radial
// projection between them, arc lengths, sector areas, and the angle and
// radius couplings used by the verification layer.
//
// All angles are radians. Work is confined to the first octant for the
// lemniscate ([0, pi/4]) and the first quadrant for the squircle
// ([0, pi/2]); whole-figure quantities are reconstructed by symmetry in
// the CLI layer, never here.
//
// Convention: the double quarter_pi below *denotes* the exact angle pi/4
// (likewise half_pi for pi/2). Trigonometric factors that vanish there are
// evaluated through a compensated distance to the endpoint, so e.g. the
// polar radius of the lemniscate is exactly 0 at theta = quarter_pi.

#include "sqlem/numerics.hpp"

namespace sqlem {

/// Nearest double to pi/4; by convention it stands for the exact value.
inline constexpr double quarter_pi = 0.785398163397448309615660845819875721;

/// Nearest double to pi/2; by convention it stands for the exact value.
inline constexpr double half_pi = 1.570796326794896619231321691639751442;

struct CartesianPoint {
  double x;
  double y;
};

struct PolarPoint {
  double r;      // nonnegative radial distance
  double theta;  // radians
};

/// Polar radius sqrt(cos 2*theta) of the lemniscate, theta in [0, pi/4].
/// Decreasing from 1 at the vertex to exactly 0 at quarter_pi.
double lemniscate_r(double theta);

/// Lemniscate point at radial distance r in [0, 1], first octant:
/// (r*sqrt((1+r^2)/2), r*sqrt((1-r^2)/2)).
CartesianPoint lemniscate_point_from_r(double r);

/// Squircle point (sqrt(cos s), sqrt(sin s)) for s in [0, pi/2].
CartesianPoint squircle_point_param(double s);

/// Squared polar radius of the squircle, tangent form
/// sec^2(theta)/sqrt(1+tan^4(theta)); valid on [0, pi/2) only. Prefer
/// squircle_r2_cos except when this form is itself under test.
double squircle_r2_tan(double theta);

/// Squared polar radius of the squircle, half-angle form
/// sqrt(2)/sqrt(1+cos^2(2*theta)); total, pi/2-periodic, stable at pi/4.
double squircle_r2_cos(double theta);

/// Radial projection of the direction theta in [0, pi/4] onto the squircle:
/// ((1+tan^4)^(-1/4), tan(theta)*(1+tan^4)^(-1/4)).
CartesianPoint radial_projection_to_squircle(double theta);

/// The angle coupling beta(alpha) defined by cos(2*beta) = cos^2(2*alpha),
/// alpha in [0, pi/4]; evaluated in the equivalent well-conditioned form
/// sin(beta) = sin(2*alpha)/sqrt(2). Fixes 0 and quarter_pi exactly.
double beta_of_alpha(double alpha);

/// d beta / d alpha = 2*cos(2*alpha)/sqrt(1+cos^2(2*alpha)), in [0, sqrt 2].
double d_beta_d_alpha(double alpha);

/// Lemniscate arc length between polar angles 0 <= theta_lo <= theta_hi
/// <= pi/4: the integral of d theta / sqrt(cos 2 theta). The integrable
/// endpoint singularity at pi/4 is supported.
double lemniscate_arc_theta(double theta_lo, double theta_hi,
                            ToleranceConfig tol = {});

/// Lemniscate arc length between radial distances 0 <= r_lo <= r_hi <= 1:
/// the integral of dr / sqrt(1-r^4). The singularity at r = 1 is supported;
/// lemniscate_arc_radial(0, 1) is half the lemniscate constant.
double lemniscate_arc_radial(double r_lo, double r_hi,
                             ToleranceConfig tol = {});

/// Area of the squircle sector swept from the positive x-axis to angle
/// alpha in [0, pi/2]: (1/sqrt 2) * integral of d theta / sqrt(1+cos^2 2
/// theta). Agrees with the tangent form below to quadrature accuracy.
double squircle_sector_area(double alpha, ToleranceConfig tol = {});

/// The same sector area through the substitution v = tan(theta):
/// one half of the integral of dv / sqrt(1+v^4) from 0 to tan(alpha); at
/// alpha = half_pi the improper integral over [0, inf) is used. Exposed as
/// an independent cross-check of squircle_sector_area.
double squircle_sector_area_tan_form(double alpha, ToleranceConfig tol = {});

/// R(T) = sqrt(2)*T/sqrt(1+T^4) for T in [0, 1]; increasing, fixes 0 and 1.
double siegel_R_of_T(double T);

/// OD as a function of R = OB in [0, 1]: sqrt((1-R^4)/(1+R^4)), decreasing.
double d_of_b(double R);

/// tan(alpha) of the direction of B as a function of R = OB in [0, 1]:
/// sqrt((1-R^2)/(1+R^2)), decreasing from 1 to 0.
double tan_alpha_of_R(double R);

}  // namespace sqlem
