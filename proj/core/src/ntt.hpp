#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qs::detail {

/// Longest convolution result the NTT kernel can produce.
std::size_t ntt_max_length();

/// First n_out entries of the integer convolution of a and b, reduced mod m.
/// Runs three power-of-two NTTs over word-size primes and recombines them
/// exactly: the true convolution entries are bounded by
/// min(|a|,|b|) * (m-1)^2 < 2^80, below the prime product (about 2^86),
/// so the reconstruction is exact and the final reduction is the true value.
std::vector<std::uint32_t> ntt_convolve_mod(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b,
                                            std::size_t n_out, std::uint32_t m);

}  // namespace qs::detail
