#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hts/dual.hpp"
#include "hts/ring.hpp"

namespace hts {

// Sq^{2^k} on a generator:
//   h[t-1,s+1]  when k = s       and s+1 < t-1,
//   h[t-1,s]    when k = s+t-1   and s   < t-1,
//   0 otherwise.
RPoly sq_pow2_on_generator(int k, Generator g);

// General Sq^n on a generator:
//   h[t-j,s+j]    when n = 2^{s+j} - 2^s             and s+j < t-j,
//   h[t-j-1,s+j]  when n = 2^{s+t-1} + 2^{s+j} - 2^s and s+j < t-j-1,
//   0 otherwise (j = 0 in the first branch is Sq^0 = id).
RPoly sq_n_on_generator(std::int64_t n, Generator g);

// Every nonzero Sq^n(m) with n <= cap, keyed by n. Computed by the Cartan
// formula over the factors of m, with per-power tables memoized.
std::map<std::int64_t, RPoly> sq_sparse(const Monomial& m, std::int64_t cap);

RPoly sq_n(std::int64_t n, const RPoly& p);

// Sum of Sq^n(p) over 0 <= n <= deg(p); p must be homogeneous with internal
// degree at most degree_window. Fixed points are exactly the invariants.
RPoly total_sq(const RPoly& p, std::int64_t degree_window);

// Element of the tensor product (dual algebra) (x) R.
class CoactionValue {
 public:
  using Term = std::pair<XiMonomial, Monomial>;

  CoactionValue() = default;  // zero
  static CoactionValue term(XiMonomial a, Monomial m);
  static CoactionValue from_terms(std::vector<Term> ts);

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  CoactionValue& operator+=(const CoactionValue& o);
  friend CoactionValue operator+(CoactionValue a, const CoactionValue& b) {
    a += b;
    return a;
  }
  friend CoactionValue operator*(const CoactionValue& a, const CoactionValue& b);
  CoactionValue pow(std::uint64_t e) const;

  RPoly xi1_component(std::uint64_t n) const;       // coefficient of xi[1]^n
  std::map<std::uint64_t, RPoly> xi1_spectrum() const;
  RPoly counit_component() const { return xi1_component(0); }

  friend bool operator==(const CoactionValue&, const CoactionValue&) = default;
  std::string str() const;

 private:
  std::vector<Term> t_;
};

// psi(h[t,s]) = sum over j >= 0, j+s+1 <= i <= t-j of
//   zeta_j^{2^s} * xi[t-i-j]^{2^{i+j+s}} (x) h[i,j+s],  zeta_j = chi(xi[j]).
CoactionValue coaction_generator(Generator g);
CoactionValue coaction(const RPoly& p);  // multiplicative extension

RPoly sq_via_coaction(std::int64_t n, const RPoly& p);

// Structural coaction terms of a generator before expanding zeta via chi;
// diagnostic display only.
struct RawCoactionTerm {
  int zeta_index;
  std::uint64_t zeta_exp;
  int xi_index;  // 0 encodes a trivial xi factor
  std::uint64_t xi_exp;
  Generator target;
  std::string str() const;
};
std::vector<RawCoactionTerm> coaction_generator_raw(Generator g);

// (diagonal (x) id) psi == (id (x) psi) psi on the generator.
bool coaction_coassociative(Generator g);

}  // namespace hts
