#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qseries/products.hpp"

using qs::CoefficientRing;
using qs::EtaFactor;
using qs::EtaQuotient;
using qs::Integer;
using qs::PowerSeries;
using qs::ThetaSum;

namespace {

const CoefficientRing Z = CoefficientRing::exact();

// Direct finite-product expansion of prod_{k>=1} (1 - q^{mk}), kept
// deliberately independent of the library's series arithmetic.
std::vector<long> euler_brute(long long m, long long trunc) {
  std::vector<long> out(static_cast<std::size_t>(trunc) + 1, 0);
  out[0] = 1;
  for (long long k = m; k <= trunc; k += m) {
    for (long long n = trunc; n >= k; --n) {
      out[static_cast<std::size_t>(n)] -= out[static_cast<std::size_t>(n - k)];
    }
  }
  return out;
}

bool matches(const PowerSeries& s, const std::vector<long>& expected) {
  if (s.trunc() + 1 < static_cast<long long>(expected.size())) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (s.coeff(static_cast<long long>(i)) != expected[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("euler_f matches a brute-force product expansion") {
  const std::vector<long> f1 = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
  CHECK(matches(qs::euler_f(1, 12, Z), f1));
  for (long long m : {1LL, 2LL, 3LL, 7LL, 14LL}) {
    const PowerSeries engine = qs::euler_f(m, 120, Z);
    const std::vector<long> brute = euler_brute(m, 120);
    for (long long n = 0; n <= 120; ++n) {
      CHECK(engine.coeff(n) == brute[static_cast<std::size_t>(n)]);
    }
  }
  CHECK(qs::euler_f(2, 100, Z) == dilate(qs::euler_f(1, 100, Z), 2));
  CHECK_THROWS_AS(qs::euler_f(0, 10, Z), std::invalid_argument);
}

TEST_CASE("eta quotient parsing") {
  const EtaQuotient eq = EtaQuotient::parse("f1^-1 * f2^-4");
  CHECK(eq.factors() ==
        std::vector<EtaFactor>{{1, -1}, {2, -4}});
  CHECK(eq.str() == "f1^-1 * f2^-4");

  SUBCASE("factors are sorted and merged") {
    const EtaQuotient canon({{14, -1}, {2, 3}, {2, 1}, {7, 0}});
    CHECK(canon.factors() == std::vector<EtaFactor>{{2, 4}, {14, -1}});
    CHECK(canon.str() == "f2^4 * f14^-1");
  }

  SUBCASE("an exponent-free factor means exponent one") {
    CHECK(EtaQuotient::parse("f1 * f2^2").factors() ==
          std::vector<EtaFactor>{{1, 1}, {2, 2}});
  }

  SUBCASE("the empty quotient prints as 1") {
    CHECK(EtaQuotient(std::vector<EtaFactor>{}).str() == "1");
    CHECK(EtaQuotient({{3, 2}, {3, -2}}).str() == "1");
  }

  SUBCASE("round trip through str") {
    for (const char* expr :
         {"f1^-1 * f2^-4", "f2^3 * f14^-1 * f98^-2", "f1"}) {
      const EtaQuotient parsed = EtaQuotient::parse(expr);
      CHECK(EtaQuotient::parse(parsed.str()) == parsed);
    }
  }

  SUBCASE("parse rejects malformed expressions") {
    CHECK_THROWS_AS(EtaQuotient::parse(""), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("g3"), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("f0"), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("f1^"), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("f1 * "), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("f1 f2"), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("f1^0"), qs::parse_error);
    CHECK_THROWS_AS(EtaQuotient::parse("f99999999999999999999"),
                    qs::parse_error);
    try {
      EtaQuotient::parse("f1 f2");
    } catch (const qs::parse_error& e) {
      CHECK(e.position() == 3);
    }
  }
}

TEST_CASE("eta quotient expansion") {
  // 1/(f1 f2^4) begins 1 + q + 6q^2 + ...
  const PowerSeries s = qs::expand(EtaQuotient::parse("f1^-1 * f2^-4"), 8, Z);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 1);
  CHECK(s ==
        mul(invert(qs::euler_f(1, 8, Z)), pow(invert(qs::euler_f(2, 8, Z)), 4)));

  SUBCASE("modular expansion agrees with reducing the exact one") {
    const EtaQuotient eq = EtaQuotient::parse("f2^3 * f1^-1 * f14^-1");
    const PowerSeries exact = qs::expand(eq, 60, Z);
    for (std::uint32_t m : {7u, 11u, 49u}) {
      CHECK(qs::expand(eq, 60, CoefficientRing::modular(m)) ==
            reduce_mod(exact, m));
    }
  }

  SUBCASE("expansion is prefix stable") {
    const EtaQuotient eq = EtaQuotient::parse("f1^-1 * f2^-4");
    CHECK(truncate(qs::expand(eq, 90, Z), 45) == qs::expand(eq, 45, Z));
  }
}

TEST_CASE("theta sums expand by walking lattice indices") {
  // sum over all integers j of (3j+1) q^{j(3j+2)}.
  ThetaSum theta;
  theta.weight_scale = 3;
  theta.weight_offset = 1;
  theta.weight_power = 1;
  theta.quad = {3, 1};
  theta.lin = {2, 1};
  theta.domain = qs::IndexDomain::all_integers;
  theta.alternating = false;
  CHECK(matches(qs::expand(theta, 5, Z), {1, -2, 0, 0, 0, 4}));

  SUBCASE("non-integer exponents are rejected") {
    ThetaSum bad = theta;
    bad.quad = {1, 2};
    bad.lin = {0, 1};
    CHECK_THROWS_WITH_AS(qs::expand(bad, 5, Z),
                         doctest::Contains("not an integer"),
                         std::invalid_argument);
  }

  SUBCASE("negative exponents are rejected") {
    ThetaSum bad = theta;
    bad.lin = {-40, 1};
    bad.domain = qs::IndexDomain::nonnegative;
    CHECK_THROWS_WITH_AS(qs::expand(bad, 5, Z),
                         doctest::Contains("negative"),
                         std::invalid_argument);
  }
}

TEST_CASE("the Jacobi expansion of f1^3") {
  const PowerSeries j = qs::jacobi_cube(10, Z);
  CHECK(matches(j, {1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9}));
  CHECK(qs::jacobi_cube(400, Z) == pow(qs::euler_f(1, 400, Z), 3));
  CHECK(qs::jacobi_cube(400, CoefficientRing::modular(7)) ==
        pow(qs::euler_f(1, 400, CoefficientRing::modular(7)), 3));
}

TEST_CASE("the double lattice expansion of f2^6") {
  const PowerSeries s = qs::f2_pow6_lattice(15, Z);
  CHECK(matches(s, {1, 0, -6, 0, 9, 0, 10, 0, -30, 0, 0, 0, 11, 0, 42, 0}));
  CHECK(qs::f2_pow6_lattice(400, Z) == pow(qs::euler_f(2, 400, Z), 6));
}

TEST_CASE("the Chu expansion of 3 f1^10") {
  const PowerSeries rhs = qs::chu_f10_rhs(300, Z);
  CHECK(rhs == scale(pow(qs::euler_f(1, 300, Z), 10), 3));
  CHECK(divide_scalar(rhs, 3) == pow(qs::euler_f(1, 300, Z), 10));
}

TEST_CASE("the weighted lattice expansion of 3 f2^10") {
  CHECK(qs::f2_pow10_lattice(300, Z) ==
        scale(pow(qs::euler_f(2, 300, Z), 10), 3));
}
