#include "phasekit/gf2.hpp"

#include <bit>

#include "phasekit/errors.hpp"
#include "phasekit/kernels.hpp"
#include "phasekit/rng.hpp"

namespace phasekit {
namespace {

std::int64_t words_for(std::int64_t bits) { return (bits + 63) / 64; }

std::uint64_t tail_mask(std::int64_t bits) {
  const int used = static_cast<int>(bits % 64);
  return used == 0 ? ~0ULL : (~0ULL >> (64 - used));
}

}  // namespace

BitVec::BitVec(std::int64_t bits) : bits_(bits) {
  if (bits < 0) throw ValidationError("bit count must be >= 0");
  words_.assign(static_cast<std::size_t>(words_for(bits)), 0);
}

bool BitVec::get(std::int64_t i) const {
  if (i < 0 || i >= bits_) throw ValidationError("bit index out of range");
  return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
}

void BitVec::set(std::int64_t i, bool v) {
  if (i < 0 || i >= bits_) throw ValidationError("bit index out of range");
  const std::uint64_t bit = 1ULL << (i & 63);
  if (v) {
    words_[static_cast<std::size_t>(i >> 6)] |= bit;
  } else {
    words_[static_cast<std::size_t>(i >> 6)] &= ~bit;
  }
}

void BitVec::xor_with(const BitVec& other) {
  if (other.bits_ != bits_) throw ValidationError("xor needs equal lengths");
  kernels::xor_words(words_.data(), other.words_.data(), words_.size());
}

std::int64_t BitVec::count() const {
  return kernels::popcount(words_.data(), words_.size());
}

std::int64_t BitVec::lowest_set_bit() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<std::int64_t>(w) * 64 + std::countr_zero(words_[w]);
    }
  }
  return -1;
}

BitMatrix::BitMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)) {
  if (rows < 0 || cols < 0) throw ValidationError("matrix shape must be non-negative");
  words_.assign(static_cast<std::size_t>(rows_ * wpr_), 0);
}

std::span<std::uint64_t> BitMatrix::row(std::int64_t r) {
  if (r < 0 || r >= rows_) throw ValidationError("row index out of range");
  return {words_.data() + r * wpr_, static_cast<std::size_t>(wpr_)};
}

std::span<const std::uint64_t> BitMatrix::row(std::int64_t r) const {
  if (r < 0 || r >= rows_) throw ValidationError("row index out of range");
  return {words_.data() + r * wpr_, static_cast<std::size_t>(wpr_)};
}

bool BitMatrix::get(std::int64_t r, std::int64_t c) const {
  if (c < 0 || c >= cols_) throw ValidationError("column index out of range");
  return (row(r)[static_cast<std::size_t>(c >> 6)] >> (c & 63)) & 1;
}

void BitMatrix::set(std::int64_t r, std::int64_t c, bool v) {
  if (c < 0 || c >= cols_) throw ValidationError("column index out of range");
  const std::uint64_t bit = 1ULL << (c & 63);
  auto w = row(r);
  if (v) {
    w[static_cast<std::size_t>(c >> 6)] |= bit;
  } else {
    w[static_cast<std::size_t>(c >> 6)] &= ~bit;
  }
}

BitMatrix random_bit_matrix(std::uint64_t seed, std::int64_t rows, std::int64_t cols) {
  BitMatrix m(rows, cols);
  const std::uint64_t mask = tail_mask(cols);
  for (std::int64_t r = 0; r < rows; ++r) {
    SplitMix64 rng(derive_stream(seed, {static_cast<std::uint64_t>(r)}));
    auto w = m.row(r);
    for (auto& word : w) word = rng.next();
    if (!w.empty()) w.back() &= mask;
  }
  return m;
}

BitMatrix transpose(const BitMatrix& in) {
  BitMatrix out(in.cols(), in.rows());
  const std::int64_t row_tiles = (in.rows() + 63) / 64;
  const std::int64_t col_tiles = (in.cols() + 63) / 64;
  std::uint64_t buf[64];
  for (std::int64_t bi = 0; bi < row_tiles; ++bi) {
    for (std::int64_t bj = 0; bj < col_tiles; ++bj) {
      for (int i = 0; i < 64; ++i) {
        const std::int64_t r = bi * 64 + i;
        buf[i] = r < in.rows() ? in.row(r)[static_cast<std::size_t>(bj)] : 0;
      }
      kernels::transpose_64x64(buf);
      for (int j = 0; j < 64; ++j) {
        const std::int64_t c = bj * 64 + j;
        if (c < out.rows()) out.row(c)[static_cast<std::size_t>(bi)] = buf[j];
      }
    }
  }
  return out;
}

}  // namespace phasekit
