// Acceptance harness: nine end-to-end criteria, one printed line each.
// Exit code is the number of failed criteria, so 0 means accepted.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qseries/io.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/series.hpp"
#include "qseries/verify.hpp"

namespace {

using qs::CoefficientRing;
using qs::CongruenceClaim;
using qs::Family;
using qs::PowerSeries;
using qs::VerificationReport;
using qs::VerifyStatus;

int g_failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void report(int index, const char* label, bool ok, double seconds) {
  std::printf("[%d/9] %-28s %s  (%.2fs)\n", index, label, ok ? "PASS" : "FAIL",
              seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <typename F>
void criterion(int index, const char* label, F&& body) {
  Timer timer;
  bool ok = false;
  try {
    ok = body(timer);
  } catch (const std::exception& e) {
    std::printf("      %s threw: %s\n", label, e.what());
    ok = false;
  }
  report(index, label, ok, timer.seconds());
}

int run_cli(const std::string& args) {
  const std::string cmd =
      "\"" QSERIES_CLI_PATH "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool all_verified(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) {
    if (r.status != VerifyStatus::verified) {
      std::printf("      not verified: %s", qs::report_to_plain(r).c_str());
      return false;
    }
  }
  return !reports.empty();
}

CongruenceClaim make_claim(Family family, long long colors, long long step,
                           long long offset, std::uint32_t modulus) {
  CongruenceClaim c;
  c.family = family;
  c.colors = colors;
  c.step = step;
  c.offset = offset;
  c.modulus = modulus;
  return c;
}

PowerSeries random_series(std::mt19937_64& rng, const CoefficientRing& ring,
                          long long trunc, bool unit_constant) {
  std::vector<long long> coeffs(static_cast<std::size_t>(trunc) + 1);
  std::uniform_int_distribution<long long> small(-20, 20);
  for (auto& c : coeffs) c = small(rng);
  if (unit_constant) {
    if (ring.is_exact()) {
      coeffs[0] = rng() % 2 == 0 ? 1 : -1;
    } else {
      coeffs[0] = 1 + static_cast<long long>(rng() % (ring.modulus() - 1));
      while (std::gcd(coeffs[0], static_cast<long long>(ring.modulus())) != 1) {
        coeffs[0] = 1 + static_cast<long long>(rng() % (ring.modulus() - 1));
      }
    }
  }
  return PowerSeries(ring, coeffs);
}

bool check_proof_replays(const Timer& timer) {
  const int rc7 = run_cli("replay --prime 7 --cmax 2 --n 1500");
  const int rc11 = run_cli("replay --prime 11 --cmax 1 --n 2500");
  if (rc7 != 0 || rc11 != 0) {
    std::printf("      replay exit codes: %d and %d\n", rc7, rc11);
    return false;
  }
  return timer.seconds() < 30.0;
}

bool check_smallest_color_counts(const Timer& timer) {
  const VerificationReport r7 =
      verify_claim(make_claim(Family::generalized_cubic, 5, 49, 31, 7), 20);
  const VerificationReport r11 =
      verify_claim(make_claim(Family::generalized_cubic, 9, 121, 36, 11), 20);
  return all_verified({r7, r11}) && timer.seconds() < 5.0;
}

bool check_shift_identities(const Timer&) {
  return all_verified({qs::check_ahlgren_instance(7, 500),
                       qs::check_ahlgren_instance(11, 500)});
}

bool check_expansion_identities(const Timer& timer) {
  qs::set_accelerated_multiply(false);
  const CoefficientRing z = CoefficientRing::exact();
  bool ok = qs::jacobi_cube(2000, z) == pow(qs::euler_f(1, 2000, z), 3);
  ok = ok && qs::chu_f10_rhs(1000, z) ==
                 scale(pow(qs::euler_f(1, 1000, z), 10), 3);
  ok = ok && qs::f2_pow6_lattice(2000, z) == pow(qs::euler_f(2, 2000, z), 6);
  return ok && timer.seconds() < 60.0;
}

bool check_support_vanishing(const Timer&) {
  return all_verified(
      {qs::check_support_vanishing(qs::SupportCheck::f2_pow6_mod7, 2000),
       qs::check_support_vanishing(qs::SupportCheck::f2_pow10_mod11, 2000)});
}

bool check_cited_congruences(const Timer&) {
  const std::vector<VerificationReport> reports = qs::cited_congruence_suite();
  return reports.size() == 10 && all_verified(reports);
}

bool check_oracle_equivalence(const Timer&) {
  for (long long c : {1LL, 2LL, 3LL, 4LL, 5LL, 6LL, 9LL}) {
    const PowerSeries series = qs::a_c_series(c, 60, CoefficientRing::exact());
    const std::vector<qs::Integer> table = qs::a_c_oracle_table(c, 60);
    for (long long n = 0; n <= 60; ++n) {
      if (series.coeff(n) != table[static_cast<std::size_t>(n)]) {
        std::printf("      mismatch at c=%lld n=%lld\n", c, n);
        return false;
      }
    }
  }
  return true;
}

bool check_negative_controls(const Timer&) {
  const std::vector<CongruenceClaim> controls = {
      make_claim(Family::generalized_cubic, 5, 49, 32, 7),
      make_claim(Family::generalized_cubic, 9, 121, 37, 11),
      make_claim(Family::classical_partition, 1, 5, 5, 5),
      make_claim(Family::classical_partition, 1, 7, 6, 7),
      make_claim(Family::classical_partition, 1, 11, 7, 11),
      make_claim(Family::classical_partition, 1, 25, 25, 25),
      make_claim(Family::classical_partition, 1, 49, 48, 49),
      make_claim(Family::classical_partition, 1, 121, 117, 121),
      make_claim(Family::generalized_cubic, 2, 25, 23, 5),
      make_claim(Family::generalized_cubic, 2, 125, 48, 5),
      make_claim(Family::generalized_cubic, 3, 25, 21, 5),
      make_claim(Family::generalized_cubic, 3, 625, 496, 25),
  };
  for (const CongruenceClaim& control : controls) {
    const VerificationReport r = verify_claim(control, 20);
    if (r.status != VerifyStatus::counterexample_found ||
        r.counterexamples.empty()) {
      std::printf("      control did not fail: %s\n", control.id().c_str());
      return false;
    }
  }
  return true;
}

bool check_properties(const Timer&) {
  const CoefficientRing z = CoefficientRing::exact();
  const CoefficientRing z7 = CoefficientRing::modular(7);

  // Every constructor yields the same prefix at truncation N and 2N.
  const long long n = 150;
  bool ok = truncate(qs::euler_f(1, 2 * n, z), n) == qs::euler_f(1, n, z);
  ok = ok && truncate(qs::a_c_series(3, 2 * n, z), n) == qs::a_c_series(3, n, z);
  ok = ok && truncate(qs::b_series(2 * n, z7), n) == qs::b_series(n, z7);
  ok = ok && truncate(qs::jacobi_cube(2 * n, z), n) == qs::jacobi_cube(n, z);
  ok = ok &&
       truncate(qs::f2_pow6_lattice(2 * n, z), n) == qs::f2_pow6_lattice(n, z);
  ok = ok && truncate(qs::chu_f10_rhs(2 * n, z), n) == qs::chu_f10_rhs(n, z);
  const qs::EtaQuotient quotient = qs::EtaQuotient::parse("f1^-1 * f2^-4");
  ok = ok && truncate(qs::expand(quotient, 2 * n, z7), n) ==
                 qs::expand(quotient, n, z7);
  if (!ok) {
    std::printf("      prefix stability failed\n");
    return false;
  }

  // mul(a, invert(a)) == 1 for random unit series over three rings.
  std::mt19937_64 rng(48731);
  const std::vector<CoefficientRing> rings = {z, z7,
                                              CoefficientRing::modular(1u << 31)};
  for (int trial = 0; trial < 100; ++trial) {
    const CoefficientRing& ring = rings[trial % rings.size()];
    const PowerSeries a = random_series(rng, ring, 40, true);
    if (mul(a, invert(a)) != PowerSeries::one(ring, 40)) {
      std::printf("      invert contract failed on trial %d\n", trial);
      return false;
    }
  }

  // Dilation followed by dissection returns the surviving prefix, and
  // dissection classes partition the coefficients.
  const PowerSeries a = random_series(rng, z, 60, false);
  for (long long m : {2LL, 5LL, 7LL}) {
    if (dissect(dilate(a, m), m, 0) != truncate(a, a.trunc() / m)) {
      std::printf("      dilation roundtrip failed at m=%lld\n", m);
      return false;
    }
    for (long long i = 0; i <= a.trunc(); ++i) {
      if (dissect(a, m, i % m).coeff(i / m) != a.coeff(i)) {
        std::printf("      dissection partition failed at m=%lld\n", m);
        return false;
      }
    }
  }

  // Thread counts change scheduling, never bytes.
  if (qs::reports_to_json(qs::cited_congruence_suite(-1, 1)) !=
      qs::reports_to_json(qs::cited_congruence_suite(-1, 3))) {
    std::printf("      suite output depends on thread count\n");
    return false;
  }
  const qs::ScanOutcome one = qs::scan_congruences(
      Family::generalized_cubic, 2, 5, {5, 25, 30}, 99, 1);
  const qs::ScanOutcome four = qs::scan_congruences(
      Family::generalized_cubic, 2, 5, {5, 25, 30}, 99, 4);
  if (one.candidates != four.candidates ||
      qs::reports_to_json(one.reports) != qs::reports_to_json(four.reports)) {
    std::printf("      scan output depends on thread count\n");
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "proof replays via cli", check_proof_replays);
  criterion(2, "smallest color counts", check_smallest_color_counts);
  criterion(3, "b shift identities", check_shift_identities);
  criterion(4, "expansion identities", check_expansion_identities);
  criterion(5, "support vanishing", check_support_vanishing);
  criterion(6, "cited congruences", check_cited_congruences);
  criterion(7, "oracle equivalence", check_oracle_equivalence);
  criterion(8, "negative controls", check_negative_controls);
  criterion(9, "property suite", check_properties);

  if (g_failures == 0) {
    std::printf("accepted: all 9 criteria passed\n");
  } else {
    std::printf("rejected: %d criteria failed\n", g_failures);
  }
  return g_failures;
}
