#include "hts/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace hts::gf2 {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVector::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (auto w : w_) n += std::popcount(w);
  return n;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.word_count(); ++i)
    if (a.words()[i] != b.words()[i]) return a.words()[i] < b.words()[i];
  return false;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
  if (rows.empty()) return BitMatrix();
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t k = 0; k < m.wpr_; ++k) m.w_[r * m.wpr_ + k] = rows[r].words()[k];
  }
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = w_[r * wpr_ + k];
  return v;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < wpr_; ++k) std::swap(w_[a * wpr_ + k], w_[b * wpr_ + k]);
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  const std::uint64_t* s = w_.data() + src * wpr_;
  std::uint64_t* d = w_.data() + dst * wpr_;
  for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::append_rows(const BitMatrix& m) {
  if (rows_ == 0 && cols_ == 0) {
    *this = m;
    return;
  }
  if (m.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  w_.insert(w_.end(), m.w_.begin(), m.w_.end());
  rows_ += m.rows_;
}

BitMatrix rref(BitMatrix m, std::vector<std::size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.xor_row_into(r, i);
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<BitVector> nullspace(const BitMatrix& m) {
  std::vector<std::size_t> piv;
  BitMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f, true);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (r.get(i, f)) v.set(piv[i], true);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  // canonicalize: the reduced echelon form of the kernel depends only on the
  // subspace, not on the pivot history above
  BitMatrix k = rref(BitMatrix::from_rows(basis));
  std::vector<BitVector> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(k.row(i));
  return out;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in mat_vec");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    BitVector row = m.row(r);
    for (std::size_t k = 0; k < row.word_count(); ++k) acc ^= row.words()[k] & v.words()[k];
    out.set(r, std::popcount(acc) & 1u);
  }
  return out;
}

bool in_row_span(const std::vector<BitVector>& rows, const BitVector& v) {
  if (!v.any()) return true;
  if (rows.empty()) return false;
  BitMatrix a = BitMatrix::from_rows(rows);
  std::size_t base = rank(a);
  BitMatrix b = a;
  b.append_rows(BitMatrix::from_rows({v}));
  return rank(b) == base;
}

}  // namespace hts::gf2
