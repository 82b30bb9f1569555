#pragma once

#include <cstdint>
#include <vector>

#include "qseries/ring.hpp"

namespace qs {

/// A formal power series in q, truncated at a fixed order N: the object
/// stores exactly the coefficients of q^0 .. q^N and nothing beyond.
///
/// Truncation is part of the value.  Binary operations require matching
/// rings and return a result truncated at the minimum of the operand
/// truncations; there is no implicit zero-extension, and reading a
/// coefficient past the truncation is an error rather than a silent zero.
/// All operations are prefix-stable: recomputing at a higher truncation and
/// cutting back yields the same coefficients.
///
/// Coefficients live either in Z (arbitrary precision) or in Z/m with
/// canonical residues in [0, m); the representation is dense in both cases.
/// Instances are immutable, so sharing them across threads is safe.
class PowerSeries {
 public:
  /// Series with the given coefficients of q^0 .. q^n; trunc is n.
  /// Modular input is canonicalized.  Throws std::invalid_argument when
  /// the coefficient sequence is empty.
  PowerSeries(const CoefficientRing& ring, std::vector<Integer> coefficients);

  /// Convenience overload for small literal coefficients.
  PowerSeries(const CoefficientRing& ring,
              const std::vector<long long>& coefficients);

  /// The zero series 0 + 0q + ... + 0q^trunc.
  static PowerSeries zero(const CoefficientRing& ring, long long trunc);

  /// The constant series c + 0q + ... + 0q^trunc.
  static PowerSeries constant(const CoefficientRing& ring, const Integer& c,
                              long long trunc);

  /// The multiplicative identity at the given truncation.
  static PowerSeries one(const CoefficientRing& ring, long long trunc);

  const CoefficientRing& ring() const noexcept { return ring_; }
  long long trunc() const noexcept { return trunc_; }

  /// Coefficient of q^n as an Integer (canonical residue when modular).
  /// Throws std::out_of_range unless 0 <= n <= trunc(): the series carries
  /// no information past its truncation.
  Integer coeff(long long n) const;

  /// True when every stored coefficient is zero.
  bool is_zero() const noexcept;

  /// Dense storage, exact ring only (throws std::logic_error otherwise).
  const std::vector<Integer>& exact_coefficients() const;

  /// Dense storage, modular ring only (throws std::logic_error otherwise).
  const std::vector<std::uint32_t>& residues() const;

  /// Equal rings, equal truncations, equal coefficients.
  friend bool operator==(const PowerSeries&, const PowerSeries&);

 private:
  PowerSeries(const CoefficientRing& ring, long long trunc);

  CoefficientRing ring_;
  long long trunc_;
  std::vector<Integer> zc_;         // exact ring storage, trunc + 1 entries
  std::vector<std::uint32_t> rc_;   // modular ring storage, trunc + 1 entries

  friend PowerSeries add(const PowerSeries&, const PowerSeries&);
  friend PowerSeries sub(const PowerSeries&, const PowerSeries&);
  friend PowerSeries negate(const PowerSeries&);
  friend PowerSeries mul_schoolbook(const PowerSeries&, const PowerSeries&);
  friend PowerSeries mul_ntt(const PowerSeries&, const PowerSeries&);
  friend PowerSeries invert(const PowerSeries&);
  friend PowerSeries scale(const PowerSeries&, const Integer&);
  friend PowerSeries divide_scalar(const PowerSeries&, const Integer&);
  friend PowerSeries dilate(const PowerSeries&, long long);
  friend PowerSeries dissect(const PowerSeries&, long long, long long);
  friend PowerSeries truncate(const PowerSeries&, long long);
  friend PowerSeries tail(const PowerSeries&, long long);
  friend PowerSeries shift(const PowerSeries&, long long);
  friend PowerSeries reduce_mod(const PowerSeries&, std::uint32_t);
};

/// Coefficientwise sum; result trunc is min(a.trunc, b.trunc).
/// Throws std::invalid_argument on a ring mismatch.
PowerSeries add(const PowerSeries& a, const PowerSeries& b);

/// Coefficientwise difference; same contract as add.
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);

/// Coefficientwise negation.
PowerSeries negate(const PowerSeries& a);

/// Product truncated at min(a.trunc, b.trunc).  Dispatches to the
/// accelerated kernel when one is enabled (see set_accelerated_multiply);
/// both kernels return bit-identical results.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// Quadratic convolution kernel, always available.
PowerSeries mul_schoolbook(const PowerSeries& a, const PowerSeries& b);

/// NTT-based kernel for modular rings (three word-size prime transforms
/// recombined by CRT).  Throws std::invalid_argument on an exact-ring input.
PowerSeries mul_ntt(const PowerSeries& a, const PowerSeries& b);

/// Enable or disable the accelerated multiplication kernel process-wide.
/// Purely a performance switch: results are identical either way.
void set_accelerated_multiply(bool enabled) noexcept;
bool accelerated_multiply() noexcept;

/// Multiplicative inverse at a.trunc.  The constant term must be a unit
/// (+-1 in Z, coprime to the modulus in Z/m); throws std::domain_error
/// otherwise.  Satisfies truncate(mul(a, invert(a)), a.trunc) == one.
PowerSeries invert(const PowerSeries& a);

/// a^e at a.trunc via binary exponentiation; negative e inverts first,
/// so the constant term must then be a unit.  pow(a, 0) is one.
PowerSeries pow(const PowerSeries& a, long long e);

/// Multiply every coefficient by the scalar k.
PowerSeries scale(const PowerSeries& a, const Integer& k);

/// Divide every coefficient by the scalar k.  In Z each coefficient must be
/// exactly divisible (std::domain_error otherwise); in Z/m this multiplies
/// by the inverse of k, so k must be a unit mod m.
PowerSeries divide_scalar(const PowerSeries& a, const Integer& k);

/// Substitute q -> q^m: coefficient of q^(m*n) becomes a_n.  The result
/// keeps truncation a.trunc, so source coefficients with m*n > a.trunc are
/// discarded; dissect(dilate(a, m), m, 0) recovers only the first
/// floor(a.trunc / m) + 1 of them.  Requires m >= 1.
PowerSeries dilate(const PowerSeries& a, long long m);

/// Arithmetic-progression extraction: coefficient n of the result is the
/// coefficient of q^(k*n + r) in a, for 0 <= r < k.  The result truncation
/// is floor((a.trunc - r) / k); throws std::invalid_argument with
/// "truncation too small to dissect" when a.trunc < r.
PowerSeries dissect(const PowerSeries& a, long long k, long long r);

/// Prefix of the first n + 1 coefficients.  n must not exceed a.trunc:
/// extending a truncation would invent zero coefficients.
PowerSeries truncate(const PowerSeries& a, long long n);

/// Drop the first d coefficients and reindex: coefficient n of the result
/// is a_{n+d}, truncation a.trunc - d.  Requires 0 <= d <= a.trunc.
PowerSeries tail(const PowerSeries& a, long long d);

/// Multiply by q^d: coefficient n + d of the result is a_n, truncation
/// a.trunc + d.  Requires d >= 0.
PowerSeries shift(const PowerSeries& a, long long d);

/// Reduce an exact-ring series into Z/m coefficientwise.  Throws
/// std::invalid_argument when a is already modular.
PowerSeries reduce_mod(const PowerSeries& a, std::uint32_t m);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return sub(a, b); }
inline PowerSeries operator-(const PowerSeries& a) { return negate(a); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

}  // namespace qs
