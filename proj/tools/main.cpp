// sqlem command-line tool: evaluate the special functions, run the
// identity-verification suite, sweep the geometric configuration to CSV,
// and render the construction as SVG.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sqlem/curves.hpp"
#include "sqlem/figure.hpp"
#include "sqlem/lemniscate_functions.hpp"
#include "sqlem/relations.hpp"
#include "sqlem/report_io.hpp"
#include "sqlem/sweep.hpp"

namespace {

sqlem::ToleranceConfig quad_config(double tol) {
  sqlem::ToleranceConfig cfg;
  cfg.abs_tol = tol;
  cfg.rel_tol = tol;
  return cfg;
}

int run_constants(const std::string& format) {
  const sqlem::Constants c = sqlem::constants();
  const double kSqrt2 = 1.4142135623730950488016887242096981;
  const std::pair<const char*, double> values[] = {
      {"varpi", c.varpi},
      {"gamma_quarter", c.gamma_quarter},
      {"half_varpi", 0.5 * c.varpi},
      {"varpi_over_2sqrt2", c.varpi / (2.0 * kSqrt2)},
      {"squircle_area", c.squircle_area},
  };
  if (format == "json") {
    nlohmann::json j;
    for (const auto& [name, value] : values) {
      j[name] = value;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [name, value] : values) {
      std::cout << name << " = " << sqlem::g17(value) << "\n";
    }
  }
  return 0;
}

int run_eval(const std::string& fn, double x, double tol) {
  const sqlem::ToleranceConfig cfg = quad_config(tol);
  double value = 0.0;
  if (fn == "sl") {
    value = sqlem::sl(x, cfg);
  } else if (fn == "cl") {
    value = sqlem::cl(x, cfg);
  } else if (fn == "slh") {
    value = sqlem::slh(x, 1e-6, cfg);
  } else if (fn == "cos4") {
    value = sqlem::cos4(x, cfg);
  } else if (fn == "sin4") {
    value = sqlem::sin4(x, cfg);
  } else if (fn == "tan4") {
    value = sqlem::tan4(x, cfg);
  } else if (fn == "beta") {
    value = sqlem::beta_of_alpha(x);
  } else if (fn == "arc") {
    value = sqlem::lemniscate_arc_theta(0.0, x, cfg);
  } else if (fn == "area") {
    value = sqlem::squircle_sector_area(x, cfg);
  } else {
    throw sqlem::DomainError("eval: unknown function \"" + fn + "\"");
  }
  std::cout << sqlem::g17(value) << "\n";
  return 0;
}

int run_verify(const std::string& which, int grid_n, double tol,
               const std::string& format) {
  std::vector<sqlem::IdentityReport> reports;
  if (which == "all") {
    reports = sqlem::verify_all(tol, grid_n);
  } else {
    reports.push_back(sqlem::verify_one(which, tol, grid_n));
  }
  if (format == "json") {
    if (which == "all") {
      std::cout << sqlem::reports_json(reports);
    } else {
      std::cout << sqlem::report_json(reports.front());
    }
  } else if (format == "csv") {
    std::cout << sqlem::reports_csv(reports);
  } else {
    std::cout << sqlem::reports_text(reports);
  }
  for (const sqlem::IdentityReport& report : reports) {
    if (!report.pass) {
      return 1;
    }
  }
  return 0;
}

int run_sweep_cmd(int steps, const std::string& out, double tol) {
  const std::vector<sqlem::SweepRow> rows =
      sqlem::run_sweep(steps, quad_config(tol));
  sqlem::atomic_write_file(out, sqlem::sweep_csv(rows));
  return 0;
}

int run_figure(const sqlem::FigureSpec& spec, const std::string& out) {
  sqlem::atomic_write_file(out, sqlem::render_figure_svg(spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "squircle/lemniscate special functions: constants, evaluation, "
      "identity verification, configuration sweeps, figures"};
  app.require_subcommand(1);

  std::string constants_format = "text";
  CLI::App* constants_cmd =
      app.add_subcommand("constants", "Print the fundamental constants");
  constants_cmd->add_option("--format", constants_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string eval_fn;
  double eval_x = 0.0;
  double eval_tol = 1e-12;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate one function at a point");
  eval_cmd
      ->add_option("fn", eval_fn,
                   "one of sl, cl, slh, cos4, sin4, tan4, beta, arc, area")
      ->required()
      ->check(CLI::IsMember(
          {"sl", "cl", "slh", "cos4", "sin4", "tan4", "beta", "arc", "area"}));
  eval_cmd->add_option("x", eval_x, "evaluation point")->required();
  eval_cmd->add_option("--tol", eval_tol, "quadrature tolerance");

  std::string verify_which = "all";
  int verify_grid = 0;
  double verify_tol = 1e-9;
  std::string verify_format = "text";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run identity verifications");
  verify_cmd->add_option("which", verify_which,
                         "verifier name, or \"all\" (default)");
  verify_cmd->add_option("--grid", verify_grid,
                         "override the grid sample count");
  verify_cmd->add_option("--tol", verify_tol, "pass/fail residual tolerance");
  verify_cmd->add_option("--format", verify_format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int sweep_steps = 100;
  std::string sweep_out;
  double sweep_tol = 1e-12;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Tabulate the configuration over alpha to CSV");
  sweep_cmd->add_option("--steps", sweep_steps, "number of rows (>= 2)");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
  sweep_cmd->add_option("--tol", sweep_tol, "quadrature tolerance");

  sqlem::FigureSpec figure_spec;
  std::string figure_out;
  const std::map<std::string, sqlem::FigureVariant> variant_map{
      {"fig1", sqlem::FigureVariant::fig1},
      {"fig3", sqlem::FigureVariant::fig3}};
  CLI::App* figure_cmd =
      app.add_subcommand("figure", "Render the construction as SVG");
  figure_cmd->add_option("--variant", figure_spec.variant, "fig1 or fig3")
      ->transform(CLI::CheckedTransformer(variant_map, CLI::ignore_case));
  figure_cmd->add_option("--alpha", figure_spec.alpha,
                         "configuration angle in [0, pi/4]");
  figure_cmd->add_option("--out", figure_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (constants_cmd->parsed()) {
      return run_constants(constants_format);
    }
    if (eval_cmd->parsed()) {
      return run_eval(eval_fn, eval_x, eval_tol);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_which, verify_grid, verify_tol, verify_format);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep_cmd(sweep_steps, sweep_out, sweep_tol);
    }
    if (figure_cmd->parsed()) {
      return run_figure(figure_spec, figure_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand guarantees a dispatch
}
