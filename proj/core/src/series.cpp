#include "qseries/series.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "ntt.hpp"

namespace qs {
namespace {

std::atomic<bool> g_accelerated{false};

void require_same_ring(const PowerSeries& a, const PowerSeries& b,
                       const char* op) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument(std::string(op) + ": ring mismatch (" +
                                a.ring().str() + " vs " + b.ring().str() + ")");
  }
}

// Indices of nonzero entries in v[0..limit).  Euler products and theta
// series are extremely sparse, so convolving against the sparser operand's
// support is the main schoolbook optimization.
template <typename T>
std::vector<std::size_t> support(const std::vector<T>& v, std::size_t limit) {
  std::vector<std::size_t> nz;
  std::size_t n = std::min(limit, v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) nz.push_back(i);
  }
  return nz;
}

std::vector<std::uint32_t> convolve_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        std::size_t n_out, std::uint32_t m) {
  std::vector<std::size_t> nza = support(a, n_out);
  std::vector<std::size_t> nzb = support(b, n_out);
  const bool a_sparser = nza.size() <= nzb.size();
  const std::vector<std::size_t>& nz = a_sparser ? nza : nzb;
  const std::vector<std::uint32_t>& s = a_sparser ? a : b;
  const std::vector<std::uint32_t>& d = a_sparser ? b : a;

  std::vector<std::uint32_t> out(n_out, 0);
  constexpr std::uint64_t kHigh = std::uint64_t(1) << 63;
  for (std::size_t n = 0; n < n_out; ++n) {
    std::uint64_t acc = 0;
    for (std::size_t idx : nz) {
      if (idx > n) break;
      acc += static_cast<std::uint64_t>(s[idx]) * d[n - idx];
      if (acc & kHigh) acc %= m;
    }
    out[n] = static_cast<std::uint32_t>(acc % m);
  }
  return out;
}

std::vector<Integer> convolve_exact(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b,
                                    std::size_t n_out) {
  std::vector<std::size_t> nza = support(a, n_out);
  std::vector<std::size_t> nzb = support(b, n_out);
  const bool a_sparser = nza.size() <= nzb.size();
  const std::vector<std::size_t>& nz = a_sparser ? nza : nzb;
  const std::vector<Integer>& s = a_sparser ? a : b;
  const std::vector<Integer>& d = a_sparser ? b : a;

  std::vector<Integer> out(n_out);
  for (std::size_t n = 0; n < n_out; ++n) {
    mpz_ptr acc = out[n].get_mpz_t();
    for (std::size_t idx : nz) {
      if (idx > n) break;
      mpz_addmul(acc, s[idx].get_mpz_t(), d[n - idx].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

PowerSeries::PowerSeries(const CoefficientRing& ring, long long trunc)
    : ring_(ring), trunc_(trunc) {
  if (ring_.is_exact()) {
    zc_.resize(static_cast<std::size_t>(trunc) + 1);
  } else {
    rc_.assign(static_cast<std::size_t>(trunc) + 1, 0);
  }
}

PowerSeries::PowerSeries(const CoefficientRing& ring,
                         std::vector<Integer> coefficients)
    : ring_(ring) {
  if (coefficients.empty()) {
    throw std::invalid_argument("a series needs at least the q^0 coefficient");
  }
  trunc_ = static_cast<long long>(coefficients.size()) - 1;
  if (ring_.is_exact()) {
    zc_ = std::move(coefficients);
  } else {
    const std::uint32_t m = ring_.modulus();
    rc_.resize(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      rc_[i] = canonical_residue(coefficients[i], m);
    }
  }
}

PowerSeries::PowerSeries(const CoefficientRing& ring,
                         const std::vector<long long>& coefficients)
    : ring_(ring) {
  if (coefficients.empty()) {
    throw std::invalid_argument("a series needs at least the q^0 coefficient");
  }
  trunc_ = static_cast<long long>(coefficients.size()) - 1;
  if (ring_.is_exact()) {
    zc_.reserve(coefficients.size());
    for (long long v : coefficients) zc_.emplace_back(static_cast<long>(v));
  } else {
    const std::uint32_t m = ring_.modulus();
    rc_.resize(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      rc_[i] = canonical_residue(coefficients[i], m);
    }
  }
}

PowerSeries PowerSeries::zero(const CoefficientRing& ring, long long trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation must be nonnegative");
  return PowerSeries(ring, trunc);
}

PowerSeries PowerSeries::constant(const CoefficientRing& ring, const Integer& c,
                                  long long trunc) {
  PowerSeries s = zero(ring, trunc);
  if (ring.is_exact()) {
    s.zc_[0] = c;
  } else {
    s.rc_[0] = canonical_residue(c, ring.modulus());
  }
  return s;
}

PowerSeries PowerSeries::one(const CoefficientRing& ring, long long trunc) {
  return constant(ring, 1, trunc);
}

Integer PowerSeries::coeff(long long n) const {
  if (n < 0 || n > trunc_) {
    throw std::out_of_range("coefficient q^" + std::to_string(n) +
                            " requested, series is truncated at q^" +
                            std::to_string(trunc_));
  }
  if (ring_.is_exact()) return zc_[static_cast<std::size_t>(n)];
  return Integer(rc_[static_cast<std::size_t>(n)]);
}

bool PowerSeries::is_zero() const noexcept {
  if (ring_.is_exact()) {
    return std::all_of(zc_.begin(), zc_.end(),
                       [](const Integer& v) { return v == 0; });
  }
  return std::all_of(rc_.begin(), rc_.end(),
                     [](std::uint32_t v) { return v == 0; });
}

const std::vector<Integer>& PowerSeries::exact_coefficients() const {
  if (!ring_.is_exact()) {
    throw std::logic_error("exact_coefficients() called on a modular series");
  }
  return zc_;
}

const std::vector<std::uint32_t>& PowerSeries::residues() const {
  if (!ring_.is_modular()) {
    throw std::logic_error("residues() called on an exact series");
  }
  return rc_;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.ring_ == b.ring_ && a.trunc_ == b.trunc_ && a.zc_ == b.zc_ &&
         a.rc_ == b.rc_;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  require_same_ring(a, b, "add");
  const long long n = std::min(a.trunc_, b.trunc_);
  PowerSeries out(a.ring_, n);
  if (a.ring_.is_exact()) {
    for (long long i = 0; i <= n; ++i) out.zc_[i] = a.zc_[i] + b.zc_[i];
  } else {
    const std::uint32_t m = a.ring_.modulus();
    for (long long i = 0; i <= n; ++i) {
      std::uint64_t s = static_cast<std::uint64_t>(a.rc_[i]) + b.rc_[i];
      out.rc_[i] = static_cast<std::uint32_t>(s >= m ? s - m : s);
    }
  }
  return out;
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_ring(a, b, "sub");
  const long long n = std::min(a.trunc_, b.trunc_);
  PowerSeries out(a.ring_, n);
  if (a.ring_.is_exact()) {
    for (long long i = 0; i <= n; ++i) out.zc_[i] = a.zc_[i] - b.zc_[i];
  } else {
    const std::uint32_t m = a.ring_.modulus();
    for (long long i = 0; i <= n; ++i) {
      out.rc_[i] = a.rc_[i] >= b.rc_[i]
                       ? a.rc_[i] - b.rc_[i]
                       : static_cast<std::uint32_t>(
                             a.rc_[i] + static_cast<std::uint64_t>(m) -
                             b.rc_[i]);
    }
  }
  return out;
}

PowerSeries negate(const PowerSeries& a) {
  PowerSeries out(a.ring_, a.trunc_);
  if (a.ring_.is_exact()) {
    for (std::size_t i = 0; i < a.zc_.size(); ++i) out.zc_[i] = -a.zc_[i];
  } else {
    const std::uint32_t m = a.ring_.modulus();
    for (std::size_t i = 0; i < a.rc_.size(); ++i) {
      out.rc_[i] = a.rc_[i] == 0 ? 0 : m - a.rc_[i];
    }
  }
  return out;
}

PowerSeries mul_schoolbook(const PowerSeries& a, const PowerSeries& b) {
  require_same_ring(a, b, "mul");
  const long long n = std::min(a.trunc_, b.trunc_);
  const std::size_t n_out = static_cast<std::size_t>(n) + 1;
  PowerSeries out(a.ring_, n);
  if (a.ring_.is_exact()) {
    out.zc_ = convolve_exact(a.zc_, b.zc_, n_out);
  } else {
    out.rc_ = convolve_mod(a.rc_, b.rc_, n_out, a.ring_.modulus());
  }
  return out;
}

PowerSeries mul_ntt(const PowerSeries& a, const PowerSeries& b) {
  require_same_ring(a, b, "mul");
  if (!a.ring_.is_modular()) {
    throw std::invalid_argument("the NTT kernel handles modular rings only");
  }
  const long long n = std::min(a.trunc_, b.trunc_);
  const std::size_t n_out = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint32_t> ca(a.rc_.begin(), a.rc_.begin() + n_out);
  std::vector<std::uint32_t> cb(b.rc_.begin(), b.rc_.begin() + n_out);
  PowerSeries out(a.ring_, n);
  auto full = detail::ntt_convolve_mod(ca, cb, n_out, a.ring_.modulus());
  full.resize(n_out, 0);
  out.rc_ = std::move(full);
  return out;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  if (g_accelerated.load(std::memory_order_relaxed) &&
      a.ring().is_modular() && b.ring().is_modular()) {
    const long long n = std::min(a.trunc(), b.trunc());
    const std::size_t n_out = static_cast<std::size_t>(n) + 1;
    if (n_out >= 64 && 2 * n_out - 1 <= detail::ntt_max_length()) {
      return mul_ntt(a, b);
    }
  }
  return mul_schoolbook(a, b);
}

void set_accelerated_multiply(bool enabled) noexcept {
  g_accelerated.store(enabled, std::memory_order_relaxed);
}

bool accelerated_multiply() noexcept {
  return g_accelerated.load(std::memory_order_relaxed);
}

PowerSeries invert(const PowerSeries& a) {
  const long long n = a.trunc_;
  PowerSeries out(a.ring_, n);
  if (a.ring_.is_exact()) {
    const std::vector<Integer>& c = a.zc_;
    if (c[0] != 1 && c[0] != -1) {
      throw std::domain_error("constant term " + c[0].get_str() +
                              " is not a unit in Z");
    }
    const bool positive = c[0] == 1;
    std::vector<std::size_t> nz;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (c[i] != 0) nz.push_back(i);
    }
    std::vector<Integer>& d = out.zc_;
    d[0] = c[0];
    mpz_class acc;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
      acc = 0;
      for (std::size_t idx : nz) {
        if (idx > k) break;
        mpz_addmul(acc.get_mpz_t(), c[idx].get_mpz_t(),
                   d[k - idx].get_mpz_t());
      }
      // d_k = -c0^{-1} * sum, and c0^{-1} = c0 for a unit of Z.
      if (positive) {
        d[k] = -acc;
      } else {
        d[k] = acc;
      }
    }
  } else {
    const std::uint32_t m = a.ring_.modulus();
    const std::vector<std::uint32_t>& c = a.rc_;
    const std::uint32_t c0inv = inv_mod(c[0], m);
    const std::uint32_t neg_c0inv = c0inv == 0 ? 0 : m - c0inv;
    std::vector<std::size_t> nz;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (c[i] != 0) nz.push_back(i);
    }
    std::vector<std::uint32_t>& d = out.rc_;
    d[0] = c0inv;
    constexpr std::uint64_t kHigh = std::uint64_t(1) << 63;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
      std::uint64_t acc = 0;
      for (std::size_t idx : nz) {
        if (idx > k) break;
        acc += static_cast<std::uint64_t>(c[idx]) * d[k - idx];
        if (acc & kHigh) acc %= m;
      }
      d[k] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(neg_c0inv) * (acc % m) % m);
    }
  }
  return out;
}

PowerSeries pow(const PowerSeries& a, long long e) {
  if (e == std::numeric_limits<long long>::min()) {
    throw std::invalid_argument("exponent out of range");
  }
  if (e < 0) return pow(invert(a), -e);
  PowerSeries result = PowerSeries::one(a.ring(), a.trunc());
  if (e == 0) return result;
  PowerSeries base = a;
  while (true) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

PowerSeries scale(const PowerSeries& a, const Integer& k) {
  PowerSeries out(a.ring_, a.trunc_);
  if (a.ring_.is_exact()) {
    for (std::size_t i = 0; i < a.zc_.size(); ++i) out.zc_[i] = a.zc_[i] * k;
  } else {
    const std::uint32_t m = a.ring_.modulus();
    const std::uint64_t r = canonical_residue(k, m);
    for (std::size_t i = 0; i < a.rc_.size(); ++i) {
      out.rc_[i] = static_cast<std::uint32_t>(a.rc_[i] * r % m);
    }
  }
  return out;
}

PowerSeries divide_scalar(const PowerSeries& a, const Integer& k) {
  if (a.ring_.is_modular()) {
    const std::uint32_t m = a.ring_.modulus();
    return scale(a, Integer(inv_mod(canonical_residue(k, m), m)));
  }
  if (k == 0) throw std::domain_error("division of a series by zero");
  PowerSeries out(a.ring_, a.trunc_);
  for (std::size_t i = 0; i < a.zc_.size(); ++i) {
    if (!mpz_divisible_p(a.zc_[i].get_mpz_t(), k.get_mpz_t())) {
      throw std::domain_error("coefficient of q^" + std::to_string(i) +
                              " (" + a.zc_[i].get_str() +
                              ") is not divisible by " + k.get_str());
    }
    mpz_divexact(out.zc_[i].get_mpz_t(), a.zc_[i].get_mpz_t(), k.get_mpz_t());
  }
  return out;
}

PowerSeries dilate(const PowerSeries& a, long long m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be positive");
  PowerSeries out(a.ring_, a.trunc_);
  // Same truncation as the input: source terms with m*i > trunc fall away.
  for (long long i = 0; i <= a.trunc_ / m; ++i) {
    if (a.ring_.is_exact()) {
      out.zc_[static_cast<std::size_t>(i * m)] = a.zc_[static_cast<std::size_t>(i)];
    } else {
      out.rc_[static_cast<std::size_t>(i * m)] = a.rc_[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

PowerSeries dissect(const PowerSeries& a, long long k, long long r) {
  if (k < 1) throw std::invalid_argument("dissection step must be positive");
  if (r < 0 || r >= k) {
    throw std::invalid_argument("dissection residue must satisfy 0 <= r < k");
  }
  if (a.trunc_ < r) {
    throw std::invalid_argument(
        "truncation too small to dissect: trunc " + std::to_string(a.trunc_) +
        " has no coefficient in the class " + std::to_string(k) + "n+" +
        std::to_string(r));
  }
  const long long n = (a.trunc_ - r) / k;
  PowerSeries out(a.ring_, n);
  for (long long i = 0; i <= n; ++i) {
    const std::size_t src = static_cast<std::size_t>(k * i + r);
    if (a.ring_.is_exact()) {
      out.zc_[static_cast<std::size_t>(i)] = a.zc_[src];
    } else {
      out.rc_[static_cast<std::size_t>(i)] = a.rc_[src];
    }
  }
  return out;
}

PowerSeries truncate(const PowerSeries& a, long long n) {
  if (n < 0 || n > a.trunc_) {
    throw std::invalid_argument(
        "truncate to " + std::to_string(n) + " is outside [0, " +
        std::to_string(a.trunc_) + "]; a series cannot be zero-extended");
  }
  PowerSeries out(a.ring_, n);
  if (a.ring_.is_exact()) {
    out.zc_.assign(a.zc_.begin(), a.zc_.begin() + n + 1);
  } else {
    out.rc_.assign(a.rc_.begin(), a.rc_.begin() + n + 1);
  }
  return out;
}

PowerSeries tail(const PowerSeries& a, long long d) {
  if (d < 0 || d > a.trunc_) {
    throw std::invalid_argument("tail offset " + std::to_string(d) +
                                " is outside [0, " + std::to_string(a.trunc_) +
                                "]");
  }
  PowerSeries out(a.ring_, a.trunc_ - d);
  if (a.ring_.is_exact()) {
    out.zc_.assign(a.zc_.begin() + d, a.zc_.end());
  } else {
    out.rc_.assign(a.rc_.begin() + d, a.rc_.end());
  }
  return out;
}

PowerSeries shift(const PowerSeries& a, long long d) {
  if (d < 0) throw std::invalid_argument("shift offset must be nonnegative");
  PowerSeries out(a.ring_, a.trunc_ + d);
  if (a.ring_.is_exact()) {
    std::copy(a.zc_.begin(), a.zc_.end(), out.zc_.begin() + d);
  } else {
    std::copy(a.rc_.begin(), a.rc_.end(), out.rc_.begin() + d);
  }
  return out;
}

PowerSeries reduce_mod(const PowerSeries& a, std::uint32_t m) {
  if (a.ring_.is_modular()) {
    throw std::invalid_argument(
        "reduce_mod expects an exact series, got one over " + a.ring_.str());
  }
  PowerSeries out(CoefficientRing::modular(m), a.trunc_);
  for (std::size_t i = 0; i < a.zc_.size(); ++i) {
    out.rc_[i] = canonical_residue(a.zc_[i], m);
  }
  return out;
}

}  // namespace qs
