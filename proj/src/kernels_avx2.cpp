// AVX2 variants of the word kernels.  Compiled with -mavx2 in its own TU and
// only ever called after the runtime cpuid check in kernels.cpp.

#include <immintrin.h>

#include <bit>

#include "phasekit/kernels.hpp"

namespace phasekit::kernels {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::int64_t total = 0;
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_and_si256(x, y));
    total += std::popcount(lanes[0]) + std::popcount(lanes[1]) + std::popcount(lanes[2]) +
             std::popcount(lanes[3]);
  }
  for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return static_cast<std::uint64_t>(total) & 1u;
}

std::int64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
  std::int64_t total = 0;
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), x);
    total += std::popcount(lanes[0]) + std::popcount(lanes[1]) + std::popcount(lanes[2]) +
             std::popcount(lanes[3]);
  }
  for (; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

}  // namespace phasekit::kernels
