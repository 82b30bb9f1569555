#include "qseries/ring.hpp"

#include <cstdlib>
#include <numeric>

namespace qs {

CoefficientRing CoefficientRing::modular(std::uint32_t modulus) {
  if (modulus < 2 || modulus > (1u << 31)) {
    throw std::invalid_argument("modulus must satisfy 2 <= m <= 2^31, got " +
                                std::to_string(modulus));
  }
  return CoefficientRing(modulus);
}

std::uint32_t CoefficientRing::modulus() const {
  if (is_exact()) {
    throw std::logic_error("the exact integer ring has no modulus");
  }
  return modulus_;
}

std::string CoefficientRing::str() const {
  return is_exact() ? "Z" : "Z/" + std::to_string(modulus_);
}

std::uint32_t canonical_residue(const Integer& v, std::uint32_t m) {
  // mpz_fdiv_ui uses floor division, so the result is already in [0, m).
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

std::uint32_t canonical_residue(long long v, std::uint32_t m) {
  long long r = v % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint32_t a, unsigned long long e, std::uint32_t m) {
  std::uint64_t base = a % m;
  std::uint64_t acc = 1 % m;
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t m) {
  // Extended Euclid on (a, m); works for any modulus, prime or not.
  std::int64_t r0 = static_cast<std::int64_t>(a % m), r1 = m;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) {
    throw std::domain_error(std::to_string(a) + " is not a unit modulo " +
                            std::to_string(m));
  }
  if (s0 < 0) s0 += m;
  return static_cast<std::uint32_t>(s0);
}

long long coefficient_budget() {
  static const long long budget = [] {
    const char* raw = std::getenv("Q_MAX_TRUNC");
    if (raw == nullptr || *raw == '\0') return 200000LL;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) return 200000LL;
    return v;
  }();
  return budget;
}

budget_error::budget_error(const std::string& where, long long needed,
                           long long budget)
    : std::runtime_error(where + ": needs " + std::to_string(needed) +
                         " coefficients, budget is " + std::to_string(budget) +
                         " (set Q_MAX_TRUNC to raise it)"),
      where_(where) {}

parse_error::parse_error(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) +
                         ")"),
      position_(position) {}

}  // namespace qs
