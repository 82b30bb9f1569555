#include "qseries/products.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace qs {
namespace {

using i128 = __int128;

void require_trunc(long long trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation must be nonnegative");
}

// alpha*j^2 + beta*j as an exact integer; errors mirror the two ways a
// ThetaSum can violate its exponent-map invariant.
long long theta_exponent(const ThetaSum& t, long long j) {
  const i128 num = i128(t.quad.num) * j * j * t.lin.den +
                   i128(t.lin.num) * j * t.quad.den;
  const i128 den = i128(t.quad.den) * t.lin.den;
  if (num % den != 0) {
    throw std::invalid_argument(
        "theta exponent is not an integer at index j=" + std::to_string(j));
  }
  const i128 v = num / den;
  if (v < 0) {
    throw std::invalid_argument(
        "theta exponent is negative at index j=" + std::to_string(j));
  }
  if (v > std::numeric_limits<long long>::max()) {
    throw std::overflow_error("theta exponent overflow at index j=" +
                              std::to_string(j));
  }
  return static_cast<long long>(v);
}

// The exponent map is a parabola opening upward; it is nondecreasing at j
// (walking up) once j >= -beta/(2 alpha), and nonincreasing (walking down)
// once j <= that vertex.  Both denominators are positive, so the comparison
// clears them without sign flips.
bool past_vertex_up(const ThetaSum& t, long long j) {
  return i128(2) * t.quad.num * t.lin.den * j >= -i128(t.lin.num) * t.quad.den;
}

bool past_vertex_down(const ThetaSum& t, long long j) {
  return i128(2) * t.quad.num * t.lin.den * j <= -i128(t.lin.num) * t.quad.den;
}

}  // namespace

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors)
    : factors_(std::move(factors)) {
  for (const EtaFactor& f : factors_) {
    if (f.scale < 1) {
      throw std::invalid_argument("eta factor scale must be positive, got " +
                                  std::to_string(f.scale));
    }
  }
  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const EtaFactor& x, const EtaFactor& y) {
                     return x.scale < y.scale;
                   });
  std::vector<EtaFactor> merged;
  for (const EtaFactor& f : factors_) {
    if (!merged.empty() && merged.back().scale == f.scale) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(f);
    }
  }
  std::erase_if(merged, [](const EtaFactor& f) { return f.exponent == 0; });
  factors_ = std::move(merged);
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  const auto read_number = [&](bool allow_sign) -> long long {
    const std::size_t start = i;
    bool negative = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw parse_error("expected a number", start);
    }
    long long value = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (value > std::numeric_limits<long long>::max() / 10 - 1) {
        throw parse_error("number too large", start);
      }
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    return negative ? -value : value;
  };

  std::vector<EtaFactor> factors;
  bool expect_factor = true;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (expect_factor) {
        throw parse_error(factors.empty() ? "empty eta-quotient expression"
                                          : "expected a factor after '*'",
                          i);
      }
      break;
    }
    if (!expect_factor) {
      if (text[i] != '*') {
        throw parse_error(std::string("expected '*' between factors, found '") +
                              text[i] + "'",
                          i);
      }
      ++i;
      expect_factor = true;
      continue;
    }
    if (text[i] != 'f') {
      throw parse_error(std::string("expected a factor 'f<m>', found '") +
                            text[i] + "'",
                        i);
    }
    const std::size_t factor_pos = i;
    ++i;
    skip_ws();
    const long long scale = read_number(false);
    if (scale < 1) {
      throw parse_error("factor subscript must be at least 1", factor_pos);
    }
    long long exponent = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      const std::size_t exp_pos = i;
      exponent = read_number(true);
      if (exponent == 0) {
        throw parse_error("zero exponent makes an empty factor", exp_pos);
      }
    }
    factors.push_back({scale, exponent});
    expect_factor = false;
  }
  return EtaQuotient(std::move(factors));
}

std::string EtaQuotient::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " * ";
    out += "f" + std::to_string(factors_[i].scale);
    if (factors_[i].exponent != 1) {
      out += "^" + std::to_string(factors_[i].exponent);
    }
  }
  return out;
}

PowerSeries euler_f(long long m, long long trunc,
                    const CoefficientRing& ring) {
  if (m < 1) {
    throw std::invalid_argument("Euler product scale must be positive, got " +
                                std::to_string(m));
  }
  require_trunc(trunc);
  ThetaSum pentagonal;
  pentagonal.weight_scale = 0;
  pentagonal.weight_offset = 1;
  pentagonal.weight_power = 0;
  pentagonal.quad = {3 * m, 2};
  pentagonal.lin = {-m, 2};
  pentagonal.domain = IndexDomain::all_integers;
  pentagonal.alternating = true;
  return expand(pentagonal, trunc, ring);
}

PowerSeries expand(const EtaQuotient& quotient, long long trunc,
                   const CoefficientRing& ring) {
  require_trunc(trunc);
  PowerSeries numerator = PowerSeries::one(ring, trunc);
  PowerSeries denominator = PowerSeries::one(ring, trunc);
  bool have_denominator = false;
  for (const EtaFactor& f : quotient.factors()) {
    const PowerSeries base = euler_f(f.scale, trunc, ring);
    if (f.exponent > 0) {
      numerator = mul(numerator, pow(base, f.exponent));
    } else {
      denominator = mul(denominator, pow(base, -f.exponent));
      have_denominator = true;
    }
  }
  if (!have_denominator) return numerator;
  return mul(numerator, invert(denominator));
}

PowerSeries expand(const ThetaSum& theta, long long trunc,
                   const CoefficientRing& ring) {
  require_trunc(trunc);
  if (theta.quad.den <= 0 || theta.lin.den <= 0) {
    throw std::invalid_argument("theta exponent denominators must be positive");
  }
  if (theta.quad.num <= 0) {
    throw std::invalid_argument("theta quadratic coefficient must be positive");
  }
  if (theta.weight_power < 0) {
    throw std::invalid_argument("theta weight power must be nonnegative");
  }

  std::vector<Integer> acc(static_cast<std::size_t>(trunc) + 1);
  mpz_class weight, base;
  // Adds the j-th term if its exponent is inside the window.
  const auto visit = [&](long long j) -> bool {
    const long long e = theta_exponent(theta, j);
    if (e > trunc) return false;
    base = static_cast<long>(theta.weight_scale * j + theta.weight_offset);
    mpz_pow_ui(weight.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(theta.weight_power));
    const bool negative = theta.alternating && (j % 2 != 0);
    if (negative) {
      acc[static_cast<std::size_t>(e)] -= weight;
    } else {
      acc[static_cast<std::size_t>(e)] += weight;
    }
    return true;
  };

  // Walk outward from 0; the exponent map is eventually monotone in each
  // direction, so stop once a miss happens past the vertex.
  for (long long j = 0;; ++j) {
    if (!visit(j) && past_vertex_up(theta, j)) break;
  }
  if (theta.domain == IndexDomain::all_integers) {
    for (long long j = -1;; --j) {
      if (!visit(j) && past_vertex_down(theta, j)) break;
    }
  }
  return PowerSeries(ring, std::move(acc));
}

PowerSeries jacobi_cube(long long trunc, const CoefficientRing& ring) {
  ThetaSum t;
  t.weight_scale = 2;
  t.weight_offset = 1;
  t.weight_power = 1;
  t.quad = {1, 2};
  t.lin = {1, 2};
  t.domain = IndexDomain::nonnegative;
  t.alternating = true;
  return expand(t, trunc, ring);
}

PowerSeries f2_pow6_lattice(long long trunc, const CoefficientRing& ring) {
  require_trunc(trunc);
  std::vector<Integer> acc(static_cast<std::size_t>(trunc) + 1);
  for (long long j = 0; j * (j + 1) <= trunc; ++j) {
    const long long ej = j * (j + 1);
    const long long wj = 2 * j + 1;
    for (long long k = 0; ej + k * (k + 1) <= trunc; ++k) {
      const long long e = ej + k * (k + 1);
      const long long w = wj * (2 * k + 1);
      if ((j + k) % 2 != 0) {
        acc[static_cast<std::size_t>(e)] -= static_cast<long>(w);
      } else {
        acc[static_cast<std::size_t>(e)] += static_cast<long>(w);
      }
    }
  }
  return PowerSeries(ring, std::move(acc));
}

PowerSeries chu_f10_rhs(long long trunc, const CoefficientRing& ring) {
  require_trunc(trunc);
  const auto theta_a = [](long long e) {
    ThetaSum t;
    t.weight_scale = 3;
    t.weight_offset = 1;
    t.weight_power = e;
    t.quad = {3, 1};
    t.lin = {2, 1};
    t.domain = IndexDomain::all_integers;
    t.alternating = false;
    return t;
  };
  const auto theta_b = [](long long e) {
    ThetaSum t;
    t.weight_scale = 6;
    t.weight_offset = 1;
    t.weight_power = e;
    t.quad = {3, 1};
    t.lin = {1, 1};
    t.domain = IndexDomain::all_integers;
    t.alternating = false;
    return t;
  };
  const PowerSeries a1 = expand(theta_a(1), trunc, ring);
  const PowerSeries a3 = expand(theta_a(3), trunc, ring);
  const PowerSeries b1 = expand(theta_b(1), trunc, ring);
  const PowerSeries b3 = expand(theta_b(3), trunc, ring);
  return sub(scale(mul(a3, b1), 4), mul(a1, b3));
}

PowerSeries f2_pow10_lattice(long long trunc, const CoefficientRing& ring) {
  require_trunc(trunc);
  std::vector<Integer> acc(static_cast<std::size_t>(trunc) + 1);
  mpz_class term;
  // Exponents 2j(3j+2) and 2k(3k+1) are nonnegative over all of Z and grow
  // monotonically away from 0 in both directions, so walk each index both
  // ways until the exponent leaves the window.
  const auto for_each_index = [trunc](auto&& body) {
    for (long long j = 0;; ++j) {
      if (!body(j)) break;
    }
    for (long long j = -1;; --j) {
      if (!body(j)) break;
    }
  };
  for_each_index([&](long long j) {
    const long long ej = 2 * j * (3 * j + 2);
    if (ej > trunc) return false;
    const long long wj = 3 * j + 1;
    for_each_index([&](long long k) {
      const long long e = ej + 2 * k * (3 * k + 1);
      if (e > trunc) return false;
      const long long wk = 6 * k + 1;
      // 4(3j+1)^3(6k+1) - (3j+1)(6k+1)^3, well within 128-bit range.
      const i128 w = i128(4) * wj * wj * wj * wk - i128(wj) * wk * wk * wk;
      term = static_cast<long>(w);  // |w| < 2^62 at desk-scale truncations
      acc[static_cast<std::size_t>(e)] += term;
      return true;
    });
    return true;
  });
  return PowerSeries(ring, std::move(acc));
}

}  // namespace qs
