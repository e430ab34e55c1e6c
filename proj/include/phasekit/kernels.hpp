#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels behind the GF(2) algebra and mask statistics.  Each has
// a scalar reference implementation and, on x86 with AVX2 available at
// runtime, a vector variant; the dispatched entry points pick once per
// process.  The scalar versions are the semantics; the vector versions must
// match them bit for bit (see tests/test_kernels.cpp).

namespace phasekit::kernels {

// dst[i] ^= src[i]
void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

// parity (0/1) of popcount(a & b)
std::uint64_t and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

// total set bits
std::int64_t popcount_scalar(const std::uint64_t* a, std::size_t n);

#if defined(PHASEKIT_HAVE_AVX2_TU)
void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::int64_t popcount_avx2(const std::uint64_t* a, std::size_t n);
#endif

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::int64_t popcount(const std::uint64_t* a, std::size_t n);

// In-place transpose of a 64x64 bit block held as 64 words (bit c of word r
// moves to bit r of word c).  Word-parallel already, so scalar only.
void transpose_64x64(std::uint64_t a[64]);

// "avx2" or "scalar"
const char* active_backend();

}  // namespace phasekit::kernels
