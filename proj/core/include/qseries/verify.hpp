#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace qs {

/// Counting function a congruence claim ranges over.
enum class Family {
  classical_partition,  // p(n)
  generalized_cubic,    // a_c(n)
  b_function,           // coefficients of f_2^3 / f_1
};

/// The statement "family(step*n + offset) == 0 (mod modulus) for all n in
/// [0, n_max]".  n_max records the range the claim has been checked on (for
/// scanner output, the witness range); verification itself takes the range
/// to test as a parameter.
struct CongruenceClaim {
  Family family = Family::classical_partition;
  long long colors = 1;  // generalized_cubic only
  long long step = 1;    // >= 1
  long long offset = 0;  // >= 0; may exceed step
  std::uint32_t modulus = 2;
  long long n_max = 0;

  /// Display form, e.g. "a_3(25n+495) = 0 mod 25".
  std::string id() const;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

/// One failing index: family(step*n + offset) mod modulus was `value`.
struct Counterexample {
  long long n = 0;
  Integer value;
};

enum class VerifyStatus { verified, counterexample_found, skipped };

/// Outcome of one check.  Counterexamples are listed in ascending n and
/// capped (a note records how many were suppressed); reports are fully
/// deterministic for fixed inputs.  wall_ms is informational only and is
/// excluded from serialization and comparison.
struct VerificationReport {
  std::string id;
  VerifyStatus status = VerifyStatus::skipped;
  long long n_max = -1;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double wall_ms = 0.0;
};

/// Check one claim for n = 0..n_terms by expanding the generating series
/// over Z/modulus once and reading every step*n+offset coefficient.
/// Throws budget_error when the needed truncation exceeds
/// coefficient_budget(), std::invalid_argument on malformed claims.
VerificationReport verify_claim(const CongruenceClaim& claim,
                                long long n_terms);

/// The coefficientwise reduction f_m^p == f_{pm} (mod p) through q^trunc,
/// the lemma that collapses p-th powers of Euler products mod p.
VerificationReport check_binomial_lemma(std::uint32_t p, long long m,
                                        long long trunc);

/// The two shift identities of the auxiliary function b, checked in exact
/// arithmetic for n = 0..n_max (with b(x) = 0 at non-integer x):
///   p = 7:   b(7n+10) ==  b(n/7)
///   p = 11:  b(11n+25) == -b(n/11)
VerificationReport check_ahlgren_instance(std::uint32_t p, long long n_max);

/// True when x^2 + y^2 == 0 (mod p) forces x == y == 0 (mod p), decided by
/// brute force over all residue pairs.  Holds exactly for p == 3 (mod 4),
/// where -1 is a quadratic nonresidue.
bool qr_forced_zero(std::uint32_t p);

enum class SupportCheck {
  f2_pow6_mod7,    // coefficients of f_2^6 on exponents == 3 (mod 7)
  f2_pow10_mod11,  // coefficients of 3*f_2^10 on exponents == 1 (mod 11)
};

/// Vanishing (mod 7 resp. mod 11) of the coefficient class the dissection
/// steps land on, checked from the exact series through q^trunc.  Notes
/// record whether the class even vanishes mod p^2, which is observed to
/// hold but is not part of the claim.
VerificationReport check_support_vanishing(SupportCheck check,
                                           long long trunc);

/// Mechanical replay of the elementary proof of the congruence family
///   p = 7:   a_{49c+5}(49n+31)  == 0 (mod 7)
///   p = 11:  a_{121c+9}(121n+36) == 0 (mod 11)
/// for every c in [0, c_max], over Z/p at working truncation trunc.  Two
/// lemma reports (the binomial collapses used by the base reduction) are
/// followed by five chain steps per c: base reduction, dissection onto the
/// residue-3 class, substitution of the b shift identity into the dissected
/// series, extraction of the vanishing support class, and an independent
/// readback of the final congruence from the untouched base series.
std::vector<VerificationReport> replay_proof(std::uint32_t p, long long c_max,
                                             long long trunc);

/// Previously published congruences for p(n), a_2(n), and a_3(n): the three
/// classical mod-5/7/11 congruences, their prime-power refinements, the
/// cubic-partition family mod 5, and the a_3 family mod powers of 5.  Each
/// claim carries its own default range; pass n_terms >= 0 to check every
/// claim on [0, n_terms] instead.  Claims run in parallel when threads > 1;
/// the report order never depends on scheduling.
std::vector<VerificationReport> cited_congruence_suite(long long n_terms = -1,
                                                       int threads = 1);

/// Scanner output: the claims that verified on the whole sampled range,
/// plus one per-step report of what was scanned (status skipped when the
/// witness range is too thin to be evidence).
struct ScanOutcome {
  std::vector<CongruenceClaim> candidates;
  std::vector<VerificationReport> reports;
};

/// For each step A in steps, test every offset B in [0, A) against
/// family(A*n+B) == 0 (mod modulus) for n = 0..n_terms and keep the offsets
/// with no violation.  Requires at least 50 witnesses (n_terms >= 49);
/// below that the step's report is skipped and no candidates are emitted.
/// Steps run in parallel when threads > 1 with deterministic output order.
ScanOutcome scan_congruences(Family family, long long colors,
                             std::uint32_t modulus,
                             const std::vector<long long>& steps,
                             long long n_terms, int threads = 1);

}  // namespace qs
