#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hts::gf2 {

// Dense GF(2) vector, bit-packed into 64-bit words. Tail padding stays zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : len_(length), w_((length + 63) / 64, 0) {}

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  bool any() const;
  std::size_t popcount() const;

  const std::uint64_t* words() const { return w_.data(); }
  std::uint64_t* words() { return w_.data(); }
  std::size_t word_count() const { return w_.size(); }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

// Deterministic total order (by length, then word content); used only to make
// tie-breaking reproducible.
bool lex_less(const BitVector& a, const BitVector& b);

// Dense GF(2) matrix, row-major, each row bit-packed.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v)
      w_[r * wpr_ + (c >> 6)] |= mask;
    else
      w_[r * wpr_ + (c >> 6)] &= ~mask;
  }

  BitVector row(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);
  void xor_row_into(std::size_t src, std::size_t dst);  // row[dst] ^= row[src]
  void append_rows(const BitMatrix& m);                 // same column count

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

// Reduced row echelon form with first-nonzero-column pivoting. When
// pivot_cols is given it receives the pivot column of each eliminated row.
BitMatrix rref(BitMatrix m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const BitMatrix& m);

// Kernel basis as rows in reduced echelon form (canonical for the subspace).
std::vector<BitVector> nullspace(const BitMatrix& m);

BitVector mat_vec(const BitMatrix& m, const BitVector& v);

bool in_row_span(const std::vector<BitVector>& rows, const BitVector& v);

}  // namespace hts::gf2
