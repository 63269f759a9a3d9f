#include "sqlem/curves.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace sqlem {

namespace {

constexpr double kSqrt2 = 1.414213562373095048801688724209698;
constexpr double kInvSqrt2 = 0.707106781186547524400844362104849;

// Residual bits of pi/4 and pi/2 beyond their nearest doubles: the exact
// angles are quarter_pi + kPi4Tail and half_pi + kPi2Tail.
constexpr double kPi4Tail = 3.061616997868383018e-17;
constexpr double kPi2Tail = 6.123233995736766036e-17;

std::string domain_msg(const char* op, const char* var, double lo,
                       const char* hi_text) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %s outside [%.17g, %s]", op, var, lo,
                hi_text);
  return buf;
}

[[noreturn]] void throw_domain(const char* op, const char* var, double lo,
                               const char* hi_text) {
  throw DomainError(domain_msg(op, var, lo, hi_text));
}

// Distance pi/4 - theta carrying the bits the double quarter_pi drops; by
// the endpoint convention it is exactly 0 at theta == quarter_pi.
double dist_to_pi4(double theta) {
  if (theta == quarter_pi) return 0.0;
  return (quarter_pi - theta) + kPi4Tail;
}

double dist_to_pi2(double s) {
  if (s == half_pi) return 0.0;
  return (half_pi - s) + kPi2Tail;
}

// cos(2*theta) for theta in [0, pi/4]. Near pi/4 the value crosses zero,
// so it is formed as sin of twice the compensated distance to keep full
// relative accuracy (and an exact zero at the endpoint); elsewhere the
// direct evaluation is already both faster and fully accurate.
double cos_two_theta(double theta) {
  if (theta < 0.7) return std::cos(2.0 * theta);
  return std::sin(2.0 * dist_to_pi4(theta));
}

double quartic_rise(double x) { return 1.0 + (x * x) * (x * x); }

}  // namespace

double lemniscate_r(double theta) {
  if (!(theta >= 0.0) || theta > quarter_pi) {
    throw_domain("lemniscate_r", "theta", 0.0, "pi/4 = 0.78539816339744831");
  }
  return std::sqrt(cos_two_theta(theta));
}

CartesianPoint lemniscate_point_from_r(double r) {
  if (!(r >= 0.0) || r > 1.0) {
    throw_domain("lemniscate_point_from_r", "r", 0.0, "1");
  }
  const double r2 = r * r;
  return {r * std::sqrt(0.5 * (1.0 + r2)), r * std::sqrt(0.5 * (1.0 - r2))};
}

CartesianPoint squircle_point_param(double s) {
  if (!(s >= 0.0) || s > half_pi) {
    throw_domain("squircle_point_param", "s", 0.0, "pi/2 = 1.5707963267948966");
  }
  // cos(s) through the distance to pi/2 once the cosine gets small, so the
  // quadrant endpoint lands exactly on (0, 1).
  const double cs = (s < 1.0) ? std::cos(s) : std::sin(dist_to_pi2(s));
  return {std::sqrt(cs), std::sqrt(std::sin(s))};
}

double squircle_r2_tan(double theta) {
  if (!(theta >= 0.0) || theta >= half_pi) {
    throw DomainError(
        "squircle_r2_tan: theta outside [0, pi/2); the tangent form diverges "
        "at pi/2 and callers must stay bounded away from it");
  }
  const double t = std::tan(theta);
  return (1.0 + t * t) / std::sqrt(quartic_rise(t));
}

double squircle_r2_cos(double theta) {
  const double c = std::cos(2.0 * theta);
  return kSqrt2 / std::sqrt(1.0 + c * c);
}

CartesianPoint radial_projection_to_squircle(double theta) {
  if (!(theta >= 0.0) || theta > quarter_pi) {
    throw_domain("radial_projection_to_squircle", "theta", 0.0,
                 "pi/4 = 0.78539816339744831");
  }
  double t;  // tan(theta), exactly 1 at the endpoint convention
  if (theta == quarter_pi) {
    t = 1.0;
  } else if (theta > 0.7) {
    const double td = std::tan(dist_to_pi4(theta));
    t = (1.0 - td) / (1.0 + td);
  } else {
    t = std::tan(theta);
  }
  const double q = std::pow(quartic_rise(t), -0.25);
  return {q, t * q};
}

double beta_of_alpha(double alpha) {
  if (!(alpha >= 0.0) || alpha > quarter_pi) {
    throw_domain("beta_of_alpha", "alpha", 0.0, "pi/4 = 0.78539816339744831");
  }
  if (alpha == quarter_pi) return quarter_pi;
  // cos 2*beta = cos^2 2*alpha rearranges to sin beta = sin(2*alpha)/sqrt 2,
  // which keeps full relative accuracy at both ends of the domain (the
  // direct acos form loses ~5 digits as alpha -> 0). Near the top, sin of
  // the double angle is taken as cos of twice the compensated distance.
  const double s2a = (alpha < 0.7) ? std::sin(2.0 * alpha)
                                   : std::cos(2.0 * dist_to_pi4(alpha));
  return std::asin(s2a * kInvSqrt2);
}

double d_beta_d_alpha(double alpha) {
  if (!(alpha >= 0.0) || alpha > quarter_pi) {
    throw_domain("d_beta_d_alpha", "alpha", 0.0, "pi/4 = 0.78539816339744831");
  }
  const double c = cos_two_theta(alpha);
  return 2.0 * c / std::sqrt(1.0 + c * c);
}

double lemniscate_arc_theta(double theta_lo, double theta_hi,
                            ToleranceConfig tol) {
  if (!(theta_lo >= 0.0) || theta_hi > quarter_pi || !(theta_lo <= theta_hi)) {
    throw DomainError(
        "lemniscate_arc_theta: need 0 <= theta_lo <= theta_hi <= pi/4 = "
        "0.78539816339744831");
  }
  if (theta_lo == theta_hi) return 0.0;
  // Substitute d = pi/4 - theta: the arc becomes the integral of
  // dd / sqrt(sin 2d) between the two compensated distances, which parks
  // the integrable singularity at d = 0 where doubles have full relative
  // resolution (no two-argument integrand needed).
  const double d_hi = dist_to_pi4(theta_hi);
  const double d_lo = dist_to_pi4(theta_lo);
  auto f = [](double d) { return 1.0 / std::sqrt(std::sin(2.0 * d)); };
  return integrate(f, {d_hi, d_lo}, tol).value;
}

double lemniscate_arc_radial(double r_lo, double r_hi, ToleranceConfig tol) {
  if (!(r_lo >= 0.0) || r_hi > 1.0 || !(r_lo <= r_hi)) {
    throw DomainError("lemniscate_arc_radial: need 0 <= r_lo <= r_hi <= 1");
  }
  if (r_lo == r_hi) return 0.0;
  // 1 - r^4 factored as (1-r)(1+r)(1+r^2); the endpoint-distance argument
  // reconstructs 1-r exactly inside the singular layer at r = 1.
  auto f = [hi = r_hi](double r, double rc) {
    const double one_minus_r = rc < 0.0 ? (1.0 - hi) - rc : 1.0 - r;
    return 1.0 / std::sqrt((1.0 + r) * (1.0 + r * r) * one_minus_r);
  };
  return integrate(f, {r_lo, r_hi}, tol).value;
}

double squircle_sector_area(double alpha, ToleranceConfig tol) {
  if (!(alpha >= 0.0) || alpha > half_pi) {
    throw_domain("squircle_sector_area", "alpha", 0.0,
                 "pi/2 = 1.5707963267948966");
  }
  if (alpha == 0.0) return 0.0;
  auto f = [](double th) {
    const double c = std::cos(2.0 * th);
    return 1.0 / std::sqrt(1.0 + c * c);
  };
  return kInvSqrt2 * integrate(f, {0.0, alpha}, tol).value;
}

double squircle_sector_area_tan_form(double alpha, ToleranceConfig tol) {
  if (!(alpha >= 0.0) || alpha > half_pi) {
    throw_domain("squircle_sector_area_tan_form", "alpha", 0.0,
                 "pi/2 = 1.5707963267948966");
  }
  if (alpha == 0.0) return 0.0;
  auto f = [](double v) { return 1.0 / std::sqrt(quartic_rise(v)); };
  const double hi = (alpha == half_pi)
                        ? std::numeric_limits<double>::infinity()
                        : std::tan(alpha);
  return 0.5 * integrate(f, {0.0, hi}, tol).value;
}

double siegel_R_of_T(double T) {
  if (!(T >= 0.0) || T > 1.0) throw_domain("siegel_R_of_T", "T", 0.0, "1");
  return kSqrt2 * T / std::sqrt(quartic_rise(T));
}

double d_of_b(double R) {
  if (!(R >= 0.0) || R > 1.0) throw_domain("d_of_b", "R", 0.0, "1");
  const double r2 = R * R;
  const double num = (1.0 - R) * (1.0 + R) * (1.0 + r2);
  return std::sqrt(num / (1.0 + r2 * r2));
}

double tan_alpha_of_R(double R) {
  if (!(R >= 0.0) || R > 1.0) throw_domain("tan_alpha_of_R", "R", 0.0, "1");
  return std::sqrt((1.0 - R) * (1.0 + R) / (1.0 + R * R));
}

}  // namespace sqlem
