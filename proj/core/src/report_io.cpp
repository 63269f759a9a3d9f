#include "sqlem/report_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace sqlem {

namespace {

nlohmann::json report_object(const IdentityReport& report) {
  // nlohmann::json orders keys alphabetically, which keeps the output
  // deterministic across runs and platforms.
  nlohmann::json j;
  j["name"] = report.name;
  j["max_abs_residual"] = report.max_abs_residual;
  j["argmax"] = report.argmax;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["samples"] = report.samples;
  return j;
}

}  // namespace

std::string g17(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string report_json(const IdentityReport& report) {
  return report_object(report).dump(2) + "\n";
}

std::string reports_json(const std::vector<IdentityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const IdentityReport& report : reports) {
    arr.push_back(report_object(report));
  }
  return arr.dump(2) + "\n";
}

std::string reports_text(const std::vector<IdentityReport>& reports) {
  std::string out;
  for (const IdentityReport& report : reports) {
    out += report.name;
    out += "  max_abs_residual=";
    out += g17(report.max_abs_residual);
    out += "  argmax=";
    out += g17(report.argmax);
    out += "  tolerance=";
    out += g17(report.tolerance);
    out += report.pass ? "  PASS" : "  FAIL";
    out += '\n';
  }
  return out;
}

std::string reports_csv(const std::vector<IdentityReport>& reports) {
  std::string out = "name,max_abs_residual,argmax,tolerance,pass,samples\n";
  for (const IdentityReport& report : reports) {
    out += report.name;
    out += ',';
    out += g17(report.max_abs_residual);
    out += ',';
    out += g17(report.argmax);
    out += ',';
    out += g17(report.tolerance);
    out += ',';
    out += report.pass ? "true" : "false";
    out += ',';
    out += std::to_string(report.samples);
    out += '\n';
  }
  return out;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw std::runtime_error("cannot open \"" + tmp +
                               "\" for writing: " + std::strerror(errno));
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      throw std::runtime_error("write to \"" + tmp + "\" failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("rename \"" + tmp + "\" -> \"" + path +
                             "\" failed: " + ec.message());
  }
}

}  // namespace sqlem
