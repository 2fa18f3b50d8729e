#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hts/gf2.hpp"
#include "hts/ring.hpp"

namespace hts {

// Generator window of an elementary site. Maximal(n) keeps h[t,s] with
// t >= n and s <= n-1; Intersection(n,m) with n < m keeps t >= m, s <= n-1.
// Both shapes reduce to a (t_min, s_max) rectangle.
class ElementarySite {
 public:
  static ElementarySite maximal(int n);
  static ElementarySite intersection(int n, int m);

  bool is_maximal() const { return m_ == 0; }
  int n() const { return n_; }
  int m() const { return m_; }
  int t_min() const { return t_min_; }
  int s_max() const { return s_max_; }

  bool contains(Generator g) const { return g.t >= t_min_ && g.s <= s_max_; }
  bool subsite_of(const ElementarySite& o) const {
    return t_min_ >= o.t_min_ && s_max_ <= o.s_max_;
  }
  std::vector<Generator> generators_up_to(std::int64_t d) const;

  friend bool operator==(const ElementarySite&, const ElementarySite&) = default;
  std::string str() const;

 private:
  ElementarySite(int n, int m, int t_min, int s_max) : n_(n), m_(m), t_min_(t_min), s_max_(s_max) {}
  int n_, m_, t_min_, s_max_;
};

// Monomials of a site at a bidegree; the site ring is free polynomial, so no
// admissibility filter applies (its generators satisfy the window anyway).
std::vector<Monomial> site_basis(const ElementarySite& site, Bidegree bd, const Limits& lim = {});

// Sets generators absent from `to` to zero; requires to ⊆ from.
RPoly restrict_poly(const ElementarySite& from, const ElementarySite& to, const RPoly& p);

struct CompatibleFamily {
  std::vector<std::pair<int, RPoly>> components;  // per maximal site n
};

struct LimitSpace {
  Bidegree bidegree;
  std::vector<int> site_ns;  // maximal sites carrying the computation
  std::vector<std::vector<Monomial>> site_bases;
  std::int64_t dim = 0;
  std::vector<CompatibleFamily> families;
};

// Equalizer of the maximal-site restrictions over pairwise intersections.
LimitSpace limit_space(Bidegree bd, const Limits& lim = {});

struct CompareVerdict {
  Bidegree bidegree;
  std::int64_t ring_dim = 0;
  std::int64_t limit_dim = 0;
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  std::vector<int> site_ns;
  bool iso() const { return well_defined && injective && surjective; }
  std::string str() const;
};

// Canonical map R^{sigma,d} -> limit: a monomial lands unchanged in every
// maximal site containing all its generators and at zero elsewhere.
CompareVerdict compare_with_closed_form(Bidegree bd, const Limits& lim = {});

}  // namespace hts
