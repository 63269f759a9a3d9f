#pragma once

// Tabulates the full geometric configuration along alpha in [0, pi/4]:
// every named point of the construction plus the arc length, sector area,
// and the signed residual tying them together.

#include <string>
#include <vector>

#include "sqlem/numerics.hpp"

namespace sqlem {

/// One row of the configuration table at squircle angle alpha.
struct SweepRow {
  double alpha;          ///< squircle sector angle
  double beta;           ///< matching lemniscate polar angle
  double r_B;            ///< |OB| = sqrt(cos 2*alpha)
  double x_B;            ///< B = (r_B cos alpha, r_B sin alpha)
  double y_B;
  double x_Bprime;       ///< B' = radial projection of B onto the squircle
  double y_Bprime;
  double r_C;            ///< |OC| = r_B^2 = cos 2*alpha
  double r_D;            ///< |OD| = sqrt((1 - r_B^4)/(1 + r_B^4))
  double arc_l;          ///< lemniscate arc from the vertex through beta
  double area_a;         ///< squircle sector area a(alpha)
  double residual_thm1;  ///< arc_l - 2*sqrt(2)*area_a (signed)
};

/// Sample `steps` >= 2 rows at alpha = k*(pi/4)/(steps-1); throws
/// DomainError for steps < 2.
std::vector<SweepRow> run_sweep(int steps, ToleranceConfig tol = {});

/// Render rows as CSV: fixed header, %.17g fields, LF line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace sqlem
