#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qs {

/// Arbitrary-precision integer used for exact coefficients.
using Integer = mpz_class;

/// Coefficient ring of a power series: either the exact integers Z, or the
/// residue ring Z/m for a modulus 2 <= m <= 2^31.  Values are immutable and
/// cheap to copy; equality compares the ring kind and the modulus.
class CoefficientRing {
 public:
  /// The exact integers Z.
  static CoefficientRing exact() noexcept { return CoefficientRing(0); }

  /// The residue ring Z/m.  Residues are kept canonical in [0, m).
  /// Throws std::invalid_argument unless 2 <= m <= 2^31.
  static CoefficientRing modular(std::uint32_t modulus);

  bool is_exact() const noexcept { return modulus_ == 0; }
  bool is_modular() const noexcept { return modulus_ != 0; }

  /// The modulus of a modular ring.  Throws std::logic_error on Z.
  std::uint32_t modulus() const;

  /// Human-readable name, "Z" or "Z/m".
  std::string str() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  explicit CoefficientRing(std::uint32_t m) noexcept : modulus_(m) {}
  std::uint32_t modulus_;  // 0 encodes the exact ring
};

/// Canonical residue of v in [0, m).
std::uint32_t canonical_residue(const Integer& v, std::uint32_t m);
std::uint32_t canonical_residue(long long v, std::uint32_t m);

/// a^e mod m for m >= 1 (pow_mod(0, 0, m) == 1 % m).
std::uint32_t pow_mod(std::uint32_t a, unsigned long long e, std::uint32_t m);

/// Multiplicative inverse of a modulo m.  The modulus need not be prime;
/// throws std::domain_error when gcd(a, m) != 1.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t m);

/// Largest number of coefficients any single series is allowed to hold,
/// read once from the environment variable Q_MAX_TRUNC (default 200000).
long long coefficient_budget();

/// Raised when a requested computation would exceed coefficient_budget().
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& where, long long needed, long long budget);
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Raised when text input (an eta-quotient expression, a serialized report)
/// cannot be parsed; carries the byte position of the offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qs
