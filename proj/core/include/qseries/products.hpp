#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qs {

/// One factor f_m^e, where f_m = prod_{n>=1} (1 - q^{mn}).
struct EtaFactor {
  long long scale = 1;     // m >= 1
  long long exponent = 1;  // nonzero after canonicalization
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// A finite product prod_i f_{m_i}^{e_i} in canonical form: factors sorted
/// by ascending scale, duplicate scales merged, zero exponents dropped.
/// The empty product denotes the constant 1.
class EtaQuotient {
 public:
  EtaQuotient() = default;
  explicit EtaQuotient(std::vector<EtaFactor> factors);

  /// Parse the text form "f1^-1 * f2^-4": factors are joined by '*', each
  /// is 'f' followed by a positive subscript and an optional '^exponent'
  /// (default 1), whitespace is insignificant.  Throws parse_error naming
  /// the offending token and its position.
  static EtaQuotient parse(std::string_view text);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }

  /// Canonical text form, parseable by parse(); "1" for the empty product.
  std::string str() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::vector<EtaFactor> factors_;
};

/// Exact rational with positive denominator, for theta exponent maps.
struct Rational {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class IndexDomain { all_integers, nonnegative };

/// The indexed sum
///
///   sum_j s(j) * (a*j + b)^e * q^(alpha*j^2 + beta*j)
///
/// with s(j) = (-1)^j when alternating and 1 otherwise, j running over the
/// chosen domain.  Requirements: alpha > 0, e >= 0, and the exponent map
/// alpha*j^2 + beta*j must take nonnegative integer values on the domain
/// (violations surface as errors during expansion, naming the index).
struct ThetaSum {
  long long weight_scale = 0;   // a
  long long weight_offset = 1;  // b
  long long weight_power = 0;   // e
  Rational quad;                // alpha
  Rational lin;                 // beta
  IndexDomain domain = IndexDomain::all_integers;
  bool alternating = false;
};

/// f_m to truncation trunc via the pentagonal number theorem
/// f_1 = sum_{k in Z} (-1)^k q^(k(3k-1)/2), with exponents scaled by m.
/// O(sqrt(trunc)) nonzero terms, never a term-by-term product.
PowerSeries euler_f(long long m, long long trunc, const CoefficientRing& ring);

/// Expand an eta quotient: positive powers multiplied out, negative powers
/// gathered and inverted once.  Factors are processed in ascending scale.
PowerSeries expand(const EtaQuotient& quotient, long long trunc,
                   const CoefficientRing& ring);

/// Expand a theta sum by walking the index from the parabola vertex
/// outward until the exponent leaves the truncation window.
PowerSeries expand(const ThetaSum& theta, long long trunc,
                   const CoefficientRing& ring);

/// Jacobi's identity gives f_1^3 as the alternating weighted sum
/// sum_{j>=0} (-1)^j (2j+1) q^(j(j+1)/2); this returns that sum, indexed
/// over nonnegative j exactly as written.
PowerSeries jacobi_cube(long long trunc, const CoefficientRing& ring);

/// The double sum expansion of f_2^6 obtained by squaring Jacobi's
/// identity and dilating: sum over j,k >= 0 of
/// (-1)^(j+k) (2j+1)(2k+1) q^(j(j+1)+k(k+1)).
PowerSeries f2_pow6_lattice(long long trunc, const CoefficientRing& ring);

/// Right-hand side of Chu's expansion of 3 f_1^10:
/// 4*A_3*B_1 - A_1*B_3 where A_e = sum_{j in Z} (3j+1)^e q^(j(3j+2)) and
/// B_e = sum_{k in Z} (6k+1)^e q^(k(3k+1)).  The caller divides by 3.
PowerSeries chu_f10_rhs(long long trunc, const CoefficientRing& ring);

/// The dilated form of Chu's identity as a single lattice sum: 3 f_2^10 =
/// sum over j,k in Z of (4(3j+1)^3(6k+1) - (3j+1)(6k+1)^3)
/// q^(2j(3j+2) + 2k(3k+1)).
PowerSeries f2_pow10_lattice(long long trunc, const CoefficientRing& ring);

}  // namespace qs
