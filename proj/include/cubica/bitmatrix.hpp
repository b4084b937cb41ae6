#pragma once

// Dense 0/1 matrix with bitset rows.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubica {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t row_sum(std::size_t r) const {
    std::size_t s = 0;
    for (std::size_t w = 0; w < words_; ++w) s += std::popcount(bits_[r * words_ + w]);
    return s;
  }
  std::vector<std::size_t> col_sums() const {
    std::vector<std::size_t> out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c : row_support(r)) ++out[c];
    return out;
  }
  std::size_t count() const {
    std::size_t s = 0;
    for (auto w : bits_) s += std::popcount(w);
    return s;
  }
  // Column indices of the ones in row r, ascending.
  std::vector<std::size_t> row_support(std::size_t r) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t x = bits_[r * words_ + w];
      while (x) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c : row_support(r)) t.set(c, r);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cubica
