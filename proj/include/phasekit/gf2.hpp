#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Packed GF(2) vectors and matrices.  Bits live in little-endian order
// inside 64-bit words; bits past size() are kept zero so word-level
// comparisons and parities need no masking.

namespace phasekit {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::int64_t bits);

  std::int64_t size() const noexcept { return bits_; }
  bool get(std::int64_t i) const;
  void set(std::int64_t i, bool v);

  std::span<std::uint64_t> words() noexcept { return {words_.data(), words_.size()}; }
  std::span<const std::uint64_t> words() const noexcept {
    return {words_.data(), words_.size()};
  }

  void xor_with(const BitVec& other);  // sizes must match
  std::int64_t count() const;          // set bits
  std::int64_t lowest_set_bit() const; // -1 when empty

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::int64_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::int64_t rows, std::int64_t cols);

  std::int64_t rows() const noexcept { return rows_; }
  std::int64_t cols() const noexcept { return cols_; }
  std::int64_t words_per_row() const noexcept { return wpr_; }

  std::span<std::uint64_t> row(std::int64_t r);
  std::span<const std::uint64_t> row(std::int64_t r) const;
  bool get(std::int64_t r, std::int64_t c) const;
  void set(std::int64_t r, std::int64_t c, bool v);

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::int64_t wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense uniform matrix; row r is a function of (seed, r) only, so row
// prefixes nest across different row counts.
BitMatrix random_bit_matrix(std::uint64_t seed, std::int64_t rows, std::int64_t cols);

// out(c, r) = in(r, c), via 64x64 block transposes.
BitMatrix transpose(const BitMatrix& in);

}  // namespace phasekit
