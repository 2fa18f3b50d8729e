#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hts/base.hpp"

namespace hts {

struct Bidegree {
  std::int64_t sigma = 0;  // cohomological degree
  std::int64_t d = 0;      // internal degree
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};
std::string to_string(const Bidegree& bd);

// Polynomial generator h[t,s] with 0 <= s < t; |h[t,s]| = (1, 2^s(2^t-1)).
struct Generator {
  int t;
  int s;
  Generator(int t, int s);
  std::int64_t internal_degree() const;  // checked
  friend auto operator<=>(const Generator&, const Generator&) = default;
};
Bidegree generator_degree(Generator g);
std::string to_string(Generator g);

// Admissible monomial in the h[t,s]. The defining relations kill any product
// whose support violates max s < min t, so a nonzero monomial always carries
// that window. The unit monomial has empty support.
class Monomial {
 public:
  struct Factor {
    Generator g;
    std::uint32_t e;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;  // unit

  // Normalizes (sort, merge, drop zero exponents). Returns nullopt when the
  // support violates the admissibility window, i.e. the product is zero.
  static std::optional<Monomial> make(std::vector<Factor> factors);
  static Monomial generator(Generator g, std::uint32_t e = 1);
  static std::optional<Monomial> mul(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint64_t e) const;  // e = 0 gives the unit

  const std::vector<Factor>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }
  Bidegree degree() const;
  std::uint32_t exponent_of(Generator g) const;
  int min_t() const;  // unit: large sentinel
  int max_s() const;  // unit: -1

  // Graded order: by (sigma, d), then lexicographically on the factor
  // expansion with generators ascending in (t, s).
  static int cmp(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

  std::string str() const;

 private:
  std::vector<Factor> f_;
};

// GF(2) sum of admissible monomials; the zero polynomial has no terms.
class RPoly {
 public:
  RPoly() = default;  // zero
  explicit RPoly(Monomial m) : t_{std::move(m)} {}
  static RPoly from_monomials(std::vector<Monomial> ms);

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Monomial>& terms() const { return t_; }

  RPoly& operator+=(const RPoly& o);
  friend RPoly operator+(RPoly a, const RPoly& b) {
    a += b;
    return a;
  }
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  RPoly pow(std::uint64_t e) const;

  bool is_homogeneous(Bidegree* bd = nullptr) const;  // zero counts as homogeneous
  std::map<Bidegree, RPoly> components() const;

  friend bool operator==(const RPoly&, const RPoly&) = default;
  std::string str() const;

 private:
  std::vector<Monomial> t_;  // canonical order, duplicate-free
};

// All generators with internal degree <= d, ascending in (t, s).
std::vector<Generator> generators_up_to(std::int64_t d);

// Monomials of the given bidegree over an explicit generator list. With
// enforce_admissibility the max s < min t window prunes the search; without
// it the generators span a free polynomial ring.
std::vector<Monomial> enumerate_monomials(const std::vector<Generator>& gens, Bidegree bd,
                                          bool enforce_admissibility, const Limits& lim = {});

// Canonical basis of R^{sigma,d}: admissible monomials in graded-lex order.
std::vector<Monomial> basis(Bidegree bd, const Limits& lim = {});

}  // namespace hts
