#include "ntt.hpp"

#include <algorithm>
#include <bit>

namespace simpade::detail::ntt {
namespace {

struct NttPrime {
  uint32_t mod;
  uint32_t root;  // primitive root
};

constexpr std::array<NttPrime, kNumPrimes> kPrimes = {{
    {998244353U, 3U},  // 119*2^23+1
    {167772161U, 3U},  // 5*2^25+1
    {469762049U, 3U},  // 7*2^26+1
}};

uint32_t pow_mod(uint64_t a, uint64_t e, uint32_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

// The modulus is a template argument so that every % below is by a
// compile-time constant.
template <uint32_t Mod, uint32_t Root>
void transform_impl(std::vector<uint32_t>& a, bool invert) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<uint32_t> tw;
  for (size_t len = 2; len <= n; len <<= 1) {
    uint32_t w = pow_mod(Root, (Mod - 1) / len, Mod);
    if (invert) w = pow_mod(w, Mod - 2, Mod);
    const size_t half = len / 2;
    tw.resize(half);
    tw[0] = 1;
    for (size_t k = 1; k < half; ++k)
      tw[k] = static_cast<uint32_t>(uint64_t{tw[k - 1]} * w % Mod);
    for (size_t i = 0; i < n; i += len) {
      uint32_t* lo = a.data() + i;
      uint32_t* hi = lo + half;
      for (size_t k = 0; k < half; ++k) {
        const uint32_t u = lo[k];
        const uint32_t v = static_cast<uint32_t>(uint64_t{hi[k]} * tw[k] % Mod);
        const uint32_t s = u + v;
        lo[k] = s >= Mod ? s - Mod : s;
        hi[k] = u >= v ? u - v : u + Mod - v;
      }
    }
  }
  if (invert) {
    const uint64_t n_inv = pow_mod(n, Mod - 2, Mod);
    for (auto& x : a) x = static_cast<uint32_t>(x * n_inv % Mod);
  }
}

void transform(std::vector<uint32_t>& a, int which, bool invert) {
  switch (which) {
    case 0:
      return transform_impl<kPrimes[0].mod, kPrimes[0].root>(a, invert);
    case 1:
      return transform_impl<kPrimes[1].mod, kPrimes[1].root>(a, invert);
    default:
      return transform_impl<kPrimes[2].mod, kPrimes[2].root>(a, invert);
  }
}

template <uint32_t Mod>
void mac_impl(std::vector<uint32_t>& acc, const std::vector<uint32_t>& b,
              const std::vector<uint32_t>& c) {
  for (size_t i = 0; i < acc.size(); ++i)
    acc[i] = static_cast<uint32_t>((acc[i] + uint64_t{b[i]} * c[i]) % Mod);
}

}  // namespace

uint32_t prime(int which) { return kPrimes[which].mod; }

size_t transform_length(size_t result_len) {
  return std::bit_ceil(std::max<size_t>(result_len, 1));
}

int primes_needed(uint64_t p, size_t min_len, size_t terms, size_t result_len) {
  if (transform_length(result_len) > kMaxLength) return 0;
  if (p >= (uint64_t{1} << 31)) return 0;
  using u128 = unsigned __int128;
  const u128 bound = u128{p - 1} * (p - 1) * min_len * std::max<size_t>(terms, 1);
  u128 product = 1;
  for (int k = 0; k < kNumPrimes; ++k) {
    product *= kPrimes[k].mod;
    if (bound < product) return k + 1;
  }
  return 0;
}

void forward(std::vector<uint32_t>& a, int which) { transform(a, which, false); }
void inverse(std::vector<uint32_t>& a, int which) { transform(a, which, true); }

std::vector<uint32_t> load(const std::vector<uint64_t>& coeffs, size_t len,
                           int which) {
  const uint32_t mod = kPrimes[which].mod;
  std::vector<uint32_t> out(len, 0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    out[i] = static_cast<uint32_t>(coeffs[i] % mod);
  return out;
}

void multiply_accumulate(std::vector<uint32_t>& acc,
                         const std::vector<uint32_t>& b,
                         const std::vector<uint32_t>& c, int which) {
  switch (which) {
    case 0:
      return mac_impl<kPrimes[0].mod>(acc, b, c);
    case 1:
      return mac_impl<kPrimes[1].mod>(acc, b, c);
    default:
      return mac_impl<kPrimes[2].mod>(acc, b, c);
  }
}

void multiply_pointwise(std::vector<uint32_t>& a,
                        const std::vector<uint32_t>& b, int which) {
  const uint64_t mod = kPrimes[which].mod;
  for (size_t i = 0; i < a.size(); ++i)
    a[i] = static_cast<uint32_t>(uint64_t{a[i]} * b[i] % mod);
}

std::vector<uint64_t> reconstruct(
    const std::array<std::vector<uint32_t>, kNumPrimes>& residues, int primes,
    size_t result_len, const Field& field) {
  std::vector<uint64_t> out(result_len);
  if (primes == 1) {
    for (size_t i = 0; i < result_len; ++i) out[i] = field.reduce(residues[0][i]);
    return out;
  }
  const uint64_t m0 = kPrimes[0].mod, m1 = kPrimes[1].mod, m2 = kPrimes[2].mod;
  const uint64_t m0_inv_m1 = pow_mod(m0, m1 - 2, static_cast<uint32_t>(m1));
  if (primes == 2) {
    for (size_t i = 0; i < result_len; ++i) {
      const uint64_t r0 = residues[0][i], r1 = residues[1][i];
      const uint64_t t1 = (r1 + m1 - r0 % m1) % m1 * m0_inv_m1 % m1;
      out[i] = field.reduce(r0 + m0 * t1);  // < m0*m1 < 2^58
    }
    return out;
  }
  const uint64_t m01_inv_m2 =
      pow_mod((m0 % m2) * (m1 % m2) % m2, m2 - 2, static_cast<uint32_t>(m2));
  const uint64_t m0_p = field.reduce(m0);
  const uint64_t m01_p = field.mul(m0_p, field.reduce(m1));
  for (size_t i = 0; i < result_len; ++i) {
    const uint64_t r0 = residues[0][i], r1 = residues[1][i], r2 = residues[2][i];
    const uint64_t t1 = (r1 + m1 - r0 % m1) % m1 * m0_inv_m1 % m1;
    // r0 + m0*t1 < m0*m1 < 2^58
    const uint64_t x01 = r0 + m0 * t1;
    const uint64_t t2 = (r2 + m2 - x01 % m2) % m2 * m01_inv_m2 % m2;
    out[i] = field.add(field.add(field.reduce(r0), field.mul(m0_p, field.reduce(t1))),
                       field.mul(m01_p, field.reduce(t2)));
  }
  return out;
}

std::vector<uint64_t> multiply(const Field& field, int primes,
                               const std::vector<uint64_t>& a,
                               const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  const size_t result_len = a.size() + b.size() - 1;
  const size_t len = transform_length(result_len);
  std::array<std::vector<uint32_t>, kNumPrimes> res;
  for (int w = 0; w < primes; ++w) {
    auto fa = load(a, len, w);
    auto fb = load(b, len, w);
    forward(fa, w);
    forward(fb, w);
    multiply_pointwise(fa, fb, w);
    inverse(fa, w);
    res[w] = std::move(fa);
  }
  return reconstruct(res, primes, result_len, field);
}

}  // namespace simpade::detail::ntt
