#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

std::filesystem::path temp_path(const std::string& stem) {
  return std::filesystem::temp_directory_path() /
         ("sqlem_cli_" + stem + "_" + std::to_string(::getpid()));
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
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

// Parses "name = value" and returns value as a double.
double value_of(const std::string& line) {
  const std::size_t eq = line.find('=');
  REQUIRE(eq != std::string::npos);
  return std::strtod(line.c_str() + eq + 1, nullptr);
}

}  // namespace

TEST_CASE("cli constants: text and json forms") {
  int code = -1;
  const std::string text = run_cli("constants", &code);
  CHECK(code == 0);
  const std::vector<std::string> lines = split_lines(text);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].rfind("varpi ", 0) == 0);
  CHECK(std::fabs(value_of(lines[0]) - 2.6220575542921198) <= 1e-14);

  const std::string json = run_cli("constants --format json", &code);
  CHECK(code == 0);
  const nlohmann::json j = nlohmann::json::parse(json);
  CHECK(j.contains("varpi"));
  CHECK(j.contains("gamma_quarter"));
  CHECK(j.contains("half_varpi"));
  CHECK(j.contains("varpi_over_2sqrt2"));
  CHECK(j.contains("squircle_area"));
  const double ratio = j["squircle_area"].get<double>() /
                       j["varpi"].get<double>();
  CHECK(std::fabs(ratio - std::sqrt(2.0)) <= 1e-15);
  CHECK(std::fabs(j["half_varpi"].get<double>() - 1.3110287771460599) <=
        1e-15);
  CHECK(std::fabs(j["varpi_over_2sqrt2"].get<double>() -
                  0.9270373386506859) <= 1e-15);
}

TEST_CASE("cli eval: values, tolerance flag and domain failures") {
  int code = -1;
  std::string out = run_cli("eval sl 0", &code);
  CHECK(code == 0);
  CHECK(std::strtod(out.c_str(), nullptr) == 0.0);

  out = run_cli("eval beta 0.39269908169872414", &code);
  CHECK(code == 0);
  CHECK(std::fabs(std::strtod(out.c_str(), nullptr) -
                  0.5235987755982988) <= 1e-12);

  out = run_cli("eval cl 0.5 --tol 1e-10", &code);
  CHECK(code == 0);
  CHECK(std::fabs(std::strtod(out.c_str(), nullptr) -
                  0.7771594206519663) <= 1e-9);

  out = run_cli("eval arc 0.5235987755982988", &code);
  CHECK(code == 0);
  CHECK(std::fabs(std::strtod(out.c_str(), nullptr) -
                  0.5840828416771517) <= 1e-11);

  out = run_cli("eval cl 5.0", &code);
  CHECK(code == 2);
  CHECK(out.find("error:") != std::string::npos);
  CHECK(out.find("[0, 1.311") != std::string::npos);

  run_cli("eval nope 1.0", &code);
  CHECK(code == 2);
  run_cli("eval sl", &code);
  CHECK(code == 2);
}

TEST_CASE("cli verify: exit codes and formats") {
  int code = -1;
  std::string out = run_cli("verify theorem1 --grid 33", &code);
  CHECK(code == 0);
  CHECK(out.find("theorem1") != std::string::npos);
  CHECK(out.find("PASS") != std::string::npos);

  out = run_cli("verify theorem1 --grid 9 --tol 1e-20", &code);
  CHECK(code == 1);
  CHECK(out.find("FAIL") != std::string::npos);

  out = run_cli("verify all --grid 9", &code);
  CHECK(code == 0);
  CHECK(split_lines(out).size() == 12);

  out = run_cli("verify pythagorean --grid 9 --format json", &code);
  CHECK(code == 0);
  const nlohmann::json j = nlohmann::json::parse(out);
  CHECK(j["name"] == "pythagorean");
  CHECK(j["pass"] == true);
  CHECK(j["samples"] == 9);

  out = run_cli("verify all --grid 5 --format json", &code);
  CHECK(code == 0);
  const nlohmann::json arr = nlohmann::json::parse(out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 12);

  out = run_cli("verify all --grid 5 --format csv", &code);
  CHECK(code == 0);
  const std::vector<std::string> lines = split_lines(out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "name,max_abs_residual,argmax,tolerance,pass,samples");

  run_cli("verify theorem3", &code);
  CHECK(code == 2);
}

TEST_CASE("cli sweep: csv output file") {
  const std::filesystem::path out_path = temp_path("sweep.csv");
  int code = -1;
  run_cli("sweep --steps 12 --out " + out_path.string(), &code);
  REQUIRE(code == 0);
  REQUIRE(std::filesystem::exists(out_path));

  const std::string csv = read_file(out_path);
  CHECK(csv.find('\r') == std::string::npos);
  const std::vector<std::string> lines = split_lines(csv);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] ==
        "alpha,beta,r_B,x_B,y_B,x_Bprime,y_Bprime,r_C,r_D,arc_l,area_a,"
        "residual_thm1");

  // A second run produces byte-identical output.
  const std::filesystem::path again = temp_path("sweep2.csv");
  run_cli("sweep --steps 12 --out " + again.string(), &code);
  REQUIRE(code == 0);
  CHECK(read_file(again) == csv);
  std::filesystem::remove(out_path);
  std::filesystem::remove(again);

  run_cli("sweep --steps 1 --out " + out_path.string(), &code);
  CHECK(code == 2);
  run_cli("sweep --steps 10 --out /nonexistent-dir/sqlem/x.csv", &code);
  CHECK(code == 2);
  run_cli("sweep --steps 10", &code);
  CHECK(code == 2);
}

TEST_CASE("cli figure: svg output file") {
  const std::filesystem::path out_path = temp_path("figure.svg");
  int code = -1;
  run_cli("figure --variant fig1 --alpha 0.5 --out " + out_path.string(),
          &code);
  REQUIRE(code == 0);
  const std::string svg = read_file(out_path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("id=\"arc-bold\"") != std::string::npos);
  CHECK(svg.find(">C</text>") != std::string::npos);

  const std::filesystem::path out3 = temp_path("figure3.svg");
  run_cli("figure --variant fig3 --alpha 0.5 --out " + out3.string(), &code);
  REQUIRE(code == 0);
  CHECK(read_file(out3).find(">D</text>") != std::string::npos);

  // Determinism across invocations.
  const std::filesystem::path rerun = temp_path("figure_rerun.svg");
  run_cli("figure --variant fig1 --alpha 0.5 --out " + rerun.string(), &code);
  REQUIRE(code == 0);
  CHECK(read_file(rerun) == svg);
  std::filesystem::remove(out_path);
  std::filesystem::remove(out3);
  std::filesystem::remove(rerun);

  run_cli("figure --alpha 2.0 --out " + out_path.string(), &code);
  CHECK(code == 2);
  run_cli("figure --variant fig9 --alpha 0.5 --out " + out_path.string(),
          &code);
  CHECK(code == 2);
  run_cli("figure --alpha 0.5", &code);
  CHECK(code == 2);
}

TEST_CASE("cli: top-level parsing") {
  int code = -1;
  run_cli("--help", &code);
  CHECK(code == 0);
  run_cli("", &code);
  CHECK(code == 2);
  run_cli("frobnicate", &code);
  CHECK(code == 2);
  run_cli("verify all --format yaml", &code);
  CHECK(code == 2);
}
