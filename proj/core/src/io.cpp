#include "qseries/io.hpp"

#include "json.hpp"

namespace qs {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string coefficient_string(const PowerSeries& series, long long n) {
  return series.coeff(n).get_str();
}

std::string status_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::verified:
      return "verified";
    case VerifyStatus::counterexample_found:
      return "counterexample";
    case VerifyStatus::skipped:
      return "skipped";
  }
  return "skipped";
}

VerifyStatus status_from_string(const std::string& text) {
  if (text == "verified") return VerifyStatus::verified;
  if (text == "counterexample") return VerifyStatus::counterexample_found;
  if (text == "skipped") return VerifyStatus::skipped;
  throw parse_error("unknown report status \"" + text + "\"", 0);
}

std::string family_string(Family family) {
  switch (family) {
    case Family::classical_partition:
      return "classical";
    case Family::generalized_cubic:
      return "cubic";
    case Family::b_function:
      return "b";
  }
  return "classical";
}

ordered_json report_json(const VerificationReport& report) {
  ordered_json j;
  j["id"] = report.id;
  j["status"] = status_string(report.status);
  j["range"] = ordered_json{{"n_max", report.n_max}};
  ordered_json cx = ordered_json::array();
  for (const Counterexample& c : report.counterexamples) {
    cx.push_back(ordered_json{{"n", c.n}, {"value", c.value.get_str()}});
  }
  j["counterexamples"] = std::move(cx);
  j["notes"] = report.notes;
  return j;
}

}  // namespace

std::string series_to_plain(const PowerSeries& series) {
  std::string out;
  for (long long n = 0; n <= series.trunc(); ++n) {
    if (n > 0) out += ", ";
    out += coefficient_string(series, n);
  }
  out += "\n";
  return out;
}

std::string series_to_csv(const PowerSeries& series) {
  std::string out = "n,coefficient\n";
  for (long long n = 0; n <= series.trunc(); ++n) {
    out += std::to_string(n) + "," + coefficient_string(series, n) + "\n";
  }
  return out;
}

std::string series_to_json(const PowerSeries& series) {
  ordered_json j;
  j["ring"] = series.ring().str();
  j["trunc"] = series.trunc();
  ordered_json coeffs = ordered_json::array();
  for (long long n = 0; n <= series.trunc(); ++n) {
    coeffs.push_back(coefficient_string(series, n));
  }
  j["coefficients"] = std::move(coeffs);
  return j.dump() + "\n";
}

std::string report_to_plain(const VerificationReport& report) {
  std::string out;
  switch (report.status) {
    case VerifyStatus::verified:
      out = "[ok]   ";
      break;
    case VerifyStatus::counterexample_found:
      out = "[FAIL] ";
      break;
    case VerifyStatus::skipped:
      out = "[skip] ";
      break;
  }
  out += report.id + " | n <= " + std::to_string(report.n_max);
  if (!report.counterexamples.empty()) {
    const Counterexample& first = report.counterexamples.front();
    out += " | counterexample at n=" + std::to_string(first.n) + ": value " +
           first.value.get_str() + " (" +
           std::to_string(report.counterexamples.size()) + " recorded)";
  }
  for (const std::string& note : report.notes) {
    out += " | " + note;
  }
  out += "\n";
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  return report_json(report).dump() + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const VerificationReport& r : reports) arr.push_back(report_json(r));
  return arr.dump() + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("bad report JSON: ") + e.what(),
                      static_cast<std::size_t>(e.byte));
  }
  try {
    VerificationReport report;
    report.id = j.at("id").get<std::string>();
    report.status = status_from_string(j.at("status").get<std::string>());
    report.n_max = j.at("range").at("n_max").get<long long>();
    for (const auto& c : j.at("counterexamples")) {
      Counterexample cx;
      cx.n = c.at("n").get<long long>();
      cx.value = Integer(c.at("value").get<std::string>());
      report.counterexamples.push_back(std::move(cx));
    }
    for (const auto& note : j.at("notes")) {
      report.notes.push_back(note.get<std::string>());
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad report JSON: ") + e.what(), 0);
  }
}

std::string claim_to_json(const CongruenceClaim& claim) {
  ordered_json j;
  j["id"] = claim.id();
  j["family"] = family_string(claim.family);
  j["colors"] = claim.colors;
  j["step"] = claim.step;
  j["offset"] = claim.offset;
  j["modulus"] = claim.modulus;
  j["witnesses"] = claim.n_max + 1;
  return j.dump() + "\n";
}

}  // namespace qs
