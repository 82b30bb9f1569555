#include "ntt.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qs::detail {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// NTT-friendly primes with primitive root 3.  998244353 - 1 is divisible by
// 2^23, the smallest power among the three, which caps the transform size.
constexpr u32 kP0 = 998244353u;
constexpr u32 kP1 = 167772161u;
constexpr u32 kP2 = 469762049u;
constexpr std::size_t kMaxLen = std::size_t(1) << 23;

u64 pw(u64 base, u64 e, u64 p) {
  base %= p;
  u64 acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

void ntt(std::vector<u32>& a, bool inverse, u32 p) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 w = pw(3, (p - 1) / len, p);
    if (inverse) w = pw(w, p - 2, p);
    for (std::size_t i = 0; i < n; i += len) {
      u64 wn = 1;
      for (std::size_t k = 0; k < len / 2; ++k) {
        u32 u = a[i + k];
        u32 v = static_cast<u32>(wn * a[i + k + len / 2] % p);
        a[i + k] = u + v < p ? u + v : u + v - p;
        a[i + k + len / 2] = u >= v ? u - v : u + p - v;
        wn = wn * w % p;
      }
    }
  }
  if (inverse) {
    u64 ninv = pw(n % p, p - 2, p);
    for (u32& x : a) x = static_cast<u32>(x * ninv % p);
  }
}

std::vector<u32> convolve_prime(const std::vector<u32>& a,
                                const std::vector<u32>& b, std::size_t n_out,
                                u32 p) {
  std::size_t full = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < full) n <<= 1;
  std::vector<u32> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % p;
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % p;
  ntt(fa, false, p);
  ntt(fb, false, p);
  for (std::size_t i = 0; i < n; ++i)
    fa[i] = static_cast<u32>(static_cast<u64>(fa[i]) * fb[i] % p);
  ntt(fa, true, p);
  fa.resize(std::min(n_out, full));
  return fa;
}

}  // namespace

std::size_t ntt_max_length() { return kMaxLen; }

std::vector<u32> ntt_convolve_mod(const std::vector<u32>& a,
                                  const std::vector<u32>& b, std::size_t n_out,
                                  u32 m) {
  if (a.empty() || b.empty() || n_out == 0) return {};
  std::size_t full = a.size() + b.size() - 1;
  if (full > kMaxLen) {
    throw std::invalid_argument("convolution length exceeds the NTT kernel");
  }
  const std::vector<u32> c0 = convolve_prime(a, b, n_out, kP0);
  const std::vector<u32> c1 = convolve_prime(a, b, n_out, kP1);
  const std::vector<u32> c2 = convolve_prime(a, b, n_out, kP2);

  // Garner reconstruction: x = v0 + P0*v1 + P0*P1*v2 with x the true
  // convolution entry, then one reduction mod m.
  const u64 inv_p0_mod_p1 = pw(kP0 % kP1, kP1 - 2, kP1);
  const u64 inv_p0p1_mod_p2 =
      pw(static_cast<u64>(kP0) * kP1 % kP2, kP2 - 2, kP2);
  const u128 p0p1 = static_cast<u128>(kP0) * kP1;

  std::size_t len = c0.size();
  std::vector<u32> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    u64 v0 = c0[i];
    u64 d1 = (c1[i] + static_cast<u64>(kP1) - v0 % kP1) % kP1;
    u64 v1 = d1 * inv_p0_mod_p1 % kP1;
    u128 partial = static_cast<u128>(v0) + static_cast<u128>(kP0) * v1;
    u64 d2 = (c2[i] + static_cast<u64>(kP2) -
              static_cast<u64>(partial % kP2)) % kP2;
    u64 v2 = d2 * inv_p0p1_mod_p2 % kP2;
    u128 x = partial + p0p1 * v2;
    out[i] = static_cast<u32>(x % m);
  }
  return out;
}

}  // namespace qs::detail
