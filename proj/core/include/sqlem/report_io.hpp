#pragma once

// Serialization of verification reports (JSON / plain text / CSV) and the
// atomic file-write helper shared by all CLI output paths. Numeric fields
// are printed with 17 significant digits so every double round-trips.

#include <string>
#include <vector>

#include "sqlem/relations.hpp"

namespace sqlem {

/// Shortest-prefix %.17g rendering of a double.
std::string g17(double value);

/// One report as a JSON object with keys name, max_abs_residual, argmax,
/// tolerance, pass, samples (two-space indent, trailing newline).
std::string report_json(const IdentityReport& report);

/// A JSON array of report objects in the given order.
std::string reports_json(const std::vector<IdentityReport>& reports);

/// One line per report: name, max residual, argmax, tolerance, PASS/FAIL.
std::string reports_text(const std::vector<IdentityReport>& reports);

/// CSV with header name,max_abs_residual,argmax,tolerance,pass,samples.
std::string reports_csv(const std::vector<IdentityReport>& reports);

/// Write content to path via a sibling temp file and rename, so readers
/// never observe a partial file; throws std::runtime_error on I/O failure.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace sqlem
