#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sqlem/curves.hpp"
#include "sqlem/figure.hpp"
#include "sqlem/report_io.hpp"
#include "sqlem/sweep.hpp"

using sqlem::DomainError;
using sqlem::FigureSpec;
using sqlem::FigureVariant;
using sqlem::IdentityReport;
using sqlem::SweepRow;
using sqlem::quarter_pi;

namespace {

std::filesystem::path temp_path(const std::string& stem) {
  return std::filesystem::temp_directory_path() /
         ("sqlem_test_" + stem + "_" + std::to_string(::getpid()));
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (const char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<double> split_fields(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    out.push_back(std::strtod(field.c_str(), nullptr));
  }
  return out;
}

// Pulls the value of `attr` out of the first tag following `marker`.
std::string attr_after(const std::string& svg, const std::string& marker,
                       const std::string& attr) {
  const std::size_t at = svg.find(marker);
  REQUIRE(at != std::string::npos);
  const std::string key = attr + "=\"";
  const std::size_t k = svg.find(key, at);
  REQUIRE(k != std::string::npos);
  const std::size_t end = svg.find('"', k + key.size());
  REQUIRE(end != std::string::npos);
  return svg.substr(k + key.size(), end - k - key.size());
}

}  // namespace

TEST_CASE("run_sweep: endpoint rows and per-row invariants") {
  const std::vector<SweepRow> rows = sqlem::run_sweep(21);
  REQUIRE(rows.size() == 21);

  const SweepRow& first = rows.front();
  CHECK(first.alpha == 0.0);
  CHECK(first.beta == 0.0);
  CHECK(first.r_B == 1.0);
  CHECK(first.x_B == 1.0);
  CHECK(first.y_B == 0.0);
  CHECK(first.arc_l == 0.0);
  CHECK(first.area_a == 0.0);
  CHECK(std::fabs(first.residual_thm1) <= 1e-12);
  CHECK(first.r_D == 0.0);

  const SweepRow& last = rows.back();
  CHECK(last.alpha == quarter_pi);
  CHECK(last.beta == quarter_pi);
  CHECK(last.r_B == 0.0);
  CHECK(last.r_D == 1.0);
  CHECK(std::fabs(last.arc_l - 1.3110287771460599) <= 1e-12);
  CHECK(std::fabs(last.area_a - 0.46351866932534295) <= 1e-12);

  for (const SweepRow& row : rows) {
    CHECK(std::fabs(row.r_C - row.r_B * row.r_B) <= 1e-13);
    const double rb4 = row.r_B * row.r_B * row.r_B * row.r_B;
    CHECK(std::fabs(row.r_D * row.r_D - (1.0 - rb4) / (1.0 + rb4)) <= 1e-13);
    CHECK(std::fabs(row.residual_thm1) <= 1e-9);
    // B sits on the lemniscate, B' on the squircle.
    const double s = row.x_B * row.x_B + row.y_B * row.y_B;
    CHECK(std::fabs(s * s - (row.x_B * row.x_B - row.y_B * row.y_B)) <=
          1e-13);
    const double x2 = row.x_Bprime * row.x_Bprime;
    const double y2 = row.y_Bprime * row.y_Bprime;
    CHECK(std::fabs(x2 * x2 + y2 * y2 - 1.0) <= 1e-13);
  }

  CHECK_THROWS_AS(sqlem::run_sweep(1), DomainError);
  CHECK_THROWS_AS(sqlem::run_sweep(0), DomainError);
}

TEST_CASE("sweep_csv: header, line endings, round trip, determinism") {
  const std::vector<SweepRow> rows = sqlem::run_sweep(7);
  const std::string csv = sqlem::sweep_csv(rows);
  CHECK(csv.find('\r') == std::string::npos);

  const std::vector<std::string> lines = split_lines(csv);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] ==
        "alpha,beta,r_B,x_B,y_B,x_Bprime,y_Bprime,r_C,r_D,arc_l,area_a,"
        "residual_thm1");

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<double> f = split_fields(lines[i]);
    REQUIRE(f.size() == 12);
    const SweepRow& row = rows[i - 1];
    // 17 significant digits give exact binary round trips.
    CHECK(f[0] == row.alpha);
    CHECK(f[2] == row.r_B);
    CHECK(f[11] == row.residual_thm1);
    CHECK(std::fabs(f[7] - f[2] * f[2]) <= 1e-13);
  }

  CHECK(sqlem::sweep_csv(sqlem::run_sweep(7)) == csv);
}

TEST_CASE("report serialization: json, text and csv") {
  IdentityReport r;
  r.name = "demo";
  r.grid = {0.0, 1.0, 5, 1e-6};
  r.max_abs_residual = 2.5e-12;
  r.argmax = 0.75;
  r.tolerance = 1e-9;
  r.pass = true;
  r.samples = 5;

  const nlohmann::json j = nlohmann::json::parse(sqlem::report_json(r));
  CHECK(j["name"] == "demo");
  CHECK(j["max_abs_residual"] == 2.5e-12);
  CHECK(j["argmax"] == 0.75);
  CHECK(j["tolerance"] == 1e-9);
  CHECK(j["pass"] == true);
  CHECK(j["samples"] == 5);

  IdentityReport f = r;
  f.name = "other";
  f.pass = false;
  const nlohmann::json arr =
      nlohmann::json::parse(sqlem::reports_json({r, f}));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[1]["pass"] == false);

  const std::string text = sqlem::reports_text({r, f});
  const std::vector<std::string> lines = split_lines(text);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("demo") == 0);
  CHECK(lines[0].find("PASS") != std::string::npos);
  CHECK(lines[1].find("FAIL") != std::string::npos);

  const std::string csv = sqlem::reports_csv({r, f});
  const std::vector<std::string> csv_lines = split_lines(csv);
  REQUIRE(csv_lines.size() == 3);
  CHECK(csv_lines[0] == "name,max_abs_residual,argmax,tolerance,pass,samples");
  CHECK(csv_lines[1].find("demo,") == 0);
  CHECK(csv_lines[1].find(",true,5") != std::string::npos);
  CHECK(csv_lines[2].find(",false,5") != std::string::npos);
}

TEST_CASE("g17 round-trips doubles") {
  for (const double v : {0.5, 1.0 / 3.0, 2.6220575542921198, 1e-300,
                         -7.25, 3.7081493546027438}) {
    CHECK(std::strtod(sqlem::g17(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("atomic_write_file: content, overwrite, no temp residue, errors") {
  const std::filesystem::path p = temp_path("atomic.txt");
  sqlem::atomic_write_file(p.string(), "first\n");
  {
    std::ifstream in(p);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "first\n");
  }
  sqlem::atomic_write_file(p.string(), "second\n");
  {
    std::ifstream in(p);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
  }
  CHECK_FALSE(std::filesystem::exists(p.string() + ".tmp"));
  std::filesystem::remove(p);

  CHECK_THROWS_AS(
      sqlem::atomic_write_file("/nonexistent-dir/sqlem/out.csv", "x"),
      std::runtime_error);
}

TEST_CASE("figure: structure of both variants") {
  FigureSpec spec;
  spec.alpha = 0.5;
  spec.variant = FigureVariant::fig1;
  const std::string fig1 = sqlem::render_figure_svg(spec);

  CHECK(fig1.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  CHECK(fig1.find("<svg xmlns=\"http://www.w3.org/2000/svg\" "
                  "version=\"1.1\"") != std::string::npos);
  CHECK(fig1.find("</svg>") != std::string::npos);
  CHECK(fig1.find("id=\"squircle\"") != std::string::npos);
  CHECK(fig1.find("id=\"lemniscate-right\"") != std::string::npos);
  CHECK(fig1.find("id=\"lemniscate-left\"") != std::string::npos);
  CHECK(fig1.find("id=\"sector\"") != std::string::npos);
  CHECK(fig1.find("id=\"arc-bold\"") != std::string::npos);
  CHECK(fig1.find(">O</text>") != std::string::npos);
  CHECK(fig1.find(">P</text>") != std::string::npos);
  CHECK(fig1.find(">B</text>") != std::string::npos);
  CHECK(fig1.find(">B\xE2\x80\xB2</text>") != std::string::npos);
  CHECK(fig1.find(">C</text>") != std::string::npos);
  CHECK(fig1.find(">D</text>") == std::string::npos);

  // Both curve polylines carry at least 257 vertices (256 segments).
  for (const char* id : {"id=\"squircle\"", "id=\"lemniscate-right\"",
                         "id=\"lemniscate-left\""}) {
    const std::string pts = attr_after(fig1, id, "points");
    std::size_t vertices = 1;
    for (const char ch : pts) {
      if (ch == ' ') ++vertices;
    }
    CHECK(vertices >= 257);
  }

  spec.variant = FigureVariant::fig3;
  const std::string fig3 = sqlem::render_figure_svg(spec);
  CHECK(fig3.find(">D</text>") != std::string::npos);
  CHECK(fig3.find(">C</text>") == std::string::npos);
  // The bold arc of the radial variant starts at the origin, which maps to
  // the pixel center of the default 800x800 canvas.
  const std::string arc = attr_after(fig3, "id=\"arc-bold\"", "points");
  CHECK(arc.rfind("400.0000000000,400.0000000000", 0) == 0);
}

TEST_CASE("figure: emitted marker coordinates lie on their curves") {
  FigureSpec spec;
  spec.alpha = 0.5;
  const std::string svg = sqlem::render_figure_svg(spec);

  // Markers are emitted in the order O, P, B, B', C within the labels
  // group; unmap each circle center back to world coordinates.
  std::vector<std::pair<double, double>> centers;
  std::size_t at = svg.find("id=\"labels\"");
  REQUIRE(at != std::string::npos);
  while ((at = svg.find("<circle cx=\"", at)) != std::string::npos) {
    at += 12;
    const double cx = std::strtod(svg.c_str() + at, nullptr);
    const std::size_t cy_at = svg.find("cy=\"", at);
    REQUIRE(cy_at != std::string::npos);
    const double cy = std::strtod(svg.c_str() + cy_at + 4, nullptr);
    centers.push_back({cx / 800.0 * 2.6 - 1.3, 1.3 - cy / 800.0 * 2.6});
  }
  REQUIRE(centers.size() == 5);

  auto on_lemniscate = [](std::pair<double, double> p) {
    const double s = p.first * p.first + p.second * p.second;
    return std::fabs(s * s - (p.first * p.first - p.second * p.second));
  };
  CHECK(on_lemniscate(centers[2]) <= 1e-10);  // B
  CHECK(on_lemniscate(centers[4]) <= 1e-10);  // C
  const double x2 = centers[3].first * centers[3].first;
  const double y2 = centers[3].second * centers[3].second;
  CHECK(std::fabs(x2 * x2 + y2 * y2 - 1.0) <= 1e-10);  // B' on the squircle
}

TEST_CASE("figure: degenerate alpha, determinism and validation") {
  FigureSpec spec;
  spec.alpha = 0.0;
  const std::string degenerate = sqlem::render_figure_svg(spec);
  CHECK(degenerate.find("id=\"arc-bold\"") == std::string::npos);
  CHECK(degenerate.find("</svg>") != std::string::npos);

  spec.alpha = 0.37;
  CHECK(sqlem::render_figure_svg(spec) == sqlem::render_figure_svg(spec));

  spec.alpha = -0.1;
  CHECK_THROWS_AS(sqlem::render_figure_svg(spec), DomainError);
  spec.alpha = 0.8;
  CHECK_THROWS_AS(sqlem::render_figure_svg(spec), DomainError);
  spec.alpha = 0.5;
  spec.width_px = 99;
  CHECK_THROWS_AS(sqlem::render_figure_svg(spec), DomainError);
  spec.width_px = 800;
  spec.height_px = 0;
  CHECK_THROWS_AS(sqlem::render_figure_svg(spec), DomainError);
}
