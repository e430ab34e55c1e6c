#include "phasekit/kernels.hpp"

#include <bit>

namespace phasekit::kernels {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return static_cast<std::uint64_t>(total) & 1u;
}

std::int64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

namespace {

bool avx2_available() {
#if defined(PHASEKIT_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

using XorFn = void (*)(std::uint64_t*, const std::uint64_t*, std::size_t);
using ParityFn = std::uint64_t (*)(const std::uint64_t*, const std::uint64_t*, std::size_t);
using PopcountFn = std::int64_t (*)(const std::uint64_t*, std::size_t);

struct Dispatch {
  XorFn xor_fn;
  ParityFn parity_fn;
  PopcountFn popcount_fn;
  const char* backend;
};

Dispatch select() {
#if defined(PHASEKIT_HAVE_AVX2_TU)
  if (avx2_available()) return {&xor_words_avx2, &and_parity_avx2, &popcount_avx2, "avx2"};
#endif
  return {&xor_words_scalar, &and_parity_scalar, &popcount_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = select();
  return d;
}

}  // namespace

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  dispatch().xor_fn(dst, src, n);
}

std::uint64_t and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  return dispatch().parity_fn(a, b, n);
}

std::int64_t popcount(const std::uint64_t* a, std::size_t n) {
  return dispatch().popcount_fn(a, n);
}

const char* active_backend() { return dispatch().backend; }

void transpose_64x64(std::uint64_t a[64]) {
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (int k = 0; k < 64; k = (k + j + 1) & ~j) {
      // swap the high-column half of the low-row word with the low-column
      // half of the high-row word (bit c of word r means row r, column c)
      const std::uint64_t t = ((a[k] >> j) ^ a[k + j]) & m;
      a[k] ^= t << j;
      a[k + j] ^= t;
    }
  }
}

}  // namespace phasekit::kernels
