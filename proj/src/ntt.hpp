#pragma once

// Number-theoretic transform over up to three primes with CRT reconstruction.
// Exact for any modulus p as long as the true integer convolution stays below
// the product of the primes used; `primes_needed` picks the smallest count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "simpade/ffpoly.hpp"

namespace simpade::detail::ntt {

inline constexpr int kNumPrimes = 3;
inline constexpr size_t kMaxLength = size_t{1} << 23;

// Number of primes (1..3) needed to reconstruct a sum of `terms`
// convolutions of length-`min_len` operands over GF(p) exactly; 0 if even
// three are not enough or the transform would be too long.
int primes_needed(uint64_t p, size_t min_len, size_t terms, size_t result_len);

size_t transform_length(size_t result_len);

// In-place forward / inverse transform of `a` (size a power of two) modulo
// prime number `which`. The inverse includes the 1/n scaling.
void forward(std::vector<uint32_t>& a, int which);
void inverse(std::vector<uint32_t>& a, int which);

uint32_t prime(int which);

// Reduces each input coefficient modulo prime `which`, zero-padded to `len`.
std::vector<uint32_t> load(const std::vector<uint64_t>& coeffs, size_t len,
                           int which);

// Pointwise a[i] += b[i]*c[i] mod prime `which`.
void multiply_accumulate(std::vector<uint32_t>& acc,
                         const std::vector<uint32_t>& b,
                         const std::vector<uint32_t>& c, int which);
void multiply_pointwise(std::vector<uint32_t>& a,
                        const std::vector<uint32_t>& b, int which);

// Recombines residues (one vector for each of the first `primes` primes)
// into coefficients mod p.
std::vector<uint64_t> reconstruct(
    const std::array<std::vector<uint32_t>, kNumPrimes>& residues, int primes,
    size_t result_len, const Field& field);

std::vector<uint64_t> multiply(const Field& field, int primes,
                               const std::vector<uint64_t>& a,
                               const std::vector<uint64_t>& b);

}  // namespace simpade::detail::ntt
