#pragma once

#include <string>
#include <vector>

#include "qseries/series.hpp"
#include "qseries/verify.hpp"

namespace qs {

// Text renderings of series and reports.  JSON comes back byte-stable:
// printing, parsing, and printing again reproduces the same bytes, which is
// what the round-trip tests pin down.  Wall-clock times are deliberately
// not serialized.

/// Comma-separated coefficient list, "1, -1, 0, ...".
std::string series_to_plain(const PowerSeries& series);

/// Two-column CSV with header "n,coefficient".
std::string series_to_csv(const PowerSeries& series);

/// {"ring": "Z" | "Z/m", "trunc": N, "coefficients": ["1", "-1", ...]}
std::string series_to_json(const PowerSeries& series);

/// One human-readable line, e.g.
/// "[ok] p(5n+4) = 0 mod 5 | n <= 100" or
/// "[FAIL] ... | counterexample at n=1: value 2".
std::string report_to_plain(const VerificationReport& report);

/// {"id": ..., "status": "verified" | "counterexample" | "skipped",
///  "range": {"n_max": ...}, "counterexamples": [{"n":..., "value":"..."}],
///  "notes": [...]}
std::string report_to_json(const VerificationReport& report);

/// JSON array of report objects.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Inverse of report_to_json; throws parse_error on malformed input.
VerificationReport report_from_json(const std::string& text);

/// Claim as a JSON object: {"id":..., "family":..., "colors":...,
///  "step":..., "offset":..., "modulus":..., "witnesses":...}.
std::string claim_to_json(const CongruenceClaim& claim);

}  // namespace qs
