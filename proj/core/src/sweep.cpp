#include "sqlem/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "sqlem/curves.hpp"

namespace sqlem {

namespace {

constexpr double kSqrt2 = 1.414213562373095048801688724209698079;

void append_g17(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(int steps, ToleranceConfig tol) {
  if (steps < 2) {
    throw DomainError("run_sweep: steps must be at least 2");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    // Scaling quarter_pi by k/(steps-1) keeps both endpoints exact and
    // never overshoots the domain.
    const double alpha =
        quarter_pi * (static_cast<double>(k) / static_cast<double>(steps - 1));
    SweepRow row;
    row.alpha = alpha;
    row.beta = beta_of_alpha(alpha);
    row.r_B = lemniscate_r(alpha);
    row.x_B = row.r_B * std::cos(alpha);
    row.y_B = row.r_B * std::sin(alpha);
    const CartesianPoint bp = radial_projection_to_squircle(alpha);
    row.x_Bprime = bp.x;
    row.y_Bprime = bp.y;
    row.r_C = row.r_B * row.r_B;
    row.r_D = d_of_b(row.r_B);
    row.arc_l = lemniscate_arc_theta(0.0, row.beta, tol);
    row.area_a = squircle_sector_area(alpha, tol);
    row.residual_thm1 = row.arc_l - 2.0 * kSqrt2 * row.area_a;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "alpha,beta,r_B,x_B,y_B,x_Bprime,y_Bprime,r_C,r_D,arc_l,area_a,"
      "residual_thm1\n";
  for (const SweepRow& row : rows) {
    const double fields[12] = {row.alpha,    row.beta,     row.r_B,
                               row.x_B,      row.y_B,      row.x_Bprime,
                               row.y_Bprime, row.r_C,      row.r_D,
                               row.arc_l,    row.area_a,   row.residual_thm1};
    for (int i = 0; i < 12; ++i) {
      if (i > 0) {
        out += ',';
      }
      append_g17(out, fields[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sqlem
