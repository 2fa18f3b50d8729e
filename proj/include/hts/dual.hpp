#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hts/base.hpp"

namespace hts {

// Monomial in the polynomial generators xi[1], xi[2], ... with |xi[n]| = 2^n - 1.
class XiMonomial {
 public:
  XiMonomial() = default;  // unit
  static XiMonomial xi(int index, std::uint64_t e = 1);
  static XiMonomial make(std::vector<std::pair<int, std::uint64_t>> factors);

  bool is_unit() const { return f_.empty(); }
  const std::vector<std::pair<int, std::uint64_t>>& factors() const { return f_; }
  std::int64_t degree() const;  // checked

  XiMonomial operator*(const XiMonomial& o) const;
  XiMonomial frobenius(int k) const;  // x -> x^{2^k}

  // n with *this == xi[1]^n (unit gives 0); nullopt when another index occurs.
  std::optional<std::uint64_t> xi1_power() const;

  static int cmp(const XiMonomial& a, const XiMonomial& b);  // graded, then expansion-lex
  friend bool operator==(const XiMonomial&, const XiMonomial&) = default;
  bool operator<(const XiMonomial& o) const { return cmp(*this, o) < 0; }

  std::string str() const;

 private:
  std::vector<std::pair<int, std::uint64_t>> f_;  // ascending index, exponents > 0
};

// GF(2) sum of XiMonomials.
class DualPoly {
 public:
  DualPoly() = default;  // zero
  explicit DualPoly(XiMonomial m) : t_{std::move(m)} {}
  static DualPoly from_monomials(std::vector<XiMonomial> ms);

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<XiMonomial>& terms() const { return t_; }
  bool contains(const XiMonomial& m) const;

  DualPoly& operator+=(const DualPoly& o);
  friend DualPoly operator+(DualPoly a, const DualPoly& b) {
    a += b;
    return a;
  }
  friend DualPoly operator*(const DualPoly& a, const DualPoly& b);
  DualPoly pow(std::uint64_t e) const;
  DualPoly frobenius(int k) const;

  friend bool operator==(const DualPoly&, const DualPoly&) = default;
  std::string str() const;

 private:
  std::vector<XiMonomial> t_;
};

// GF(2) sum of tensor terms a (x) b with both sides XiMonomials.
class DualTensor {
 public:
  using Term = std::pair<XiMonomial, XiMonomial>;

  DualTensor() = default;  // zero
  static DualTensor term(XiMonomial a, XiMonomial b);
  static DualTensor from_terms(std::vector<Term> ts);

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  DualTensor& operator+=(const DualTensor& o);
  friend DualTensor operator+(DualTensor a, const DualTensor& b) {
    a += b;
    return a;
  }
  friend DualTensor operator*(const DualTensor& a, const DualTensor& b);
  DualTensor pow(std::uint64_t e) const;

  friend bool operator==(const DualTensor&, const DualTensor&) = default;
  std::string str() const;

 private:
  std::vector<Term> t_;
};

// diagonal(xi[n]) = sum_{i=0..n} xi[n-i]^{2^i} (x) xi[i], with xi[0] = 1.
DualTensor diagonal_xi(int n);
DualTensor diagonal(const DualPoly& p);  // multiplicative extension

// Antipode chi, memoized per generator: chi(xi[n]) = sum_{i<n} xi[n-i]^{2^i} chi(xi[i]).
const DualPoly& conjugate_xi(int n);
DualPoly conjugation(const DualPoly& p);

// Coefficient of xi[1]^n (n = 0 reads the unit term).
int milnor_coefficient(const DualPoly& p, std::uint64_t n);

}  // namespace hts
