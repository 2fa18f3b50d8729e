#include "hts/limit.hpp"

#include <algorithm>
#include <stdexcept>

namespace hts {

ElementarySite ElementarySite::maximal(int n) {
  if (n < 1) throw std::invalid_argument("maximal site index must be >= 1");
  return ElementarySite(n, 0, n, n - 1);
}

ElementarySite ElementarySite::intersection(int n, int m) {
  if (n < 1 || m <= n) throw std::invalid_argument("intersection requires 1 <= n < m");
  return ElementarySite(n, m, m, n - 1);
}

std::vector<Generator> ElementarySite::generators_up_to(std::int64_t d) const {
  std::vector<Generator> out;
  for (const Generator& g : hts::generators_up_to(d))
    if (contains(g)) out.push_back(g);
  return out;
}

std::string ElementarySite::str() const {
  if (is_maximal()) return "E(" + std::to_string(n_) + ")";
  return "E(" + std::to_string(n_) + ")&E(" + std::to_string(m_) + ")";
}

std::vector<Monomial> site_basis(const ElementarySite& site, Bidegree bd, const Limits& lim) {
  return enumerate_monomials(site.generators_up_to(bd.d), bd,
                             /*enforce_admissibility=*/false, lim);
}

RPoly restrict_poly(const ElementarySite& from, const ElementarySite& to, const RPoly& p) {
  if (!to.subsite_of(from)) throw std::invalid_argument("restriction target is not a subsite");
  std::vector<Monomial> kept;
  for (const Monomial& m : p.terms()) {
    bool inside = true;
    for (const auto& f : m.factors())
      if (!to.contains(f.g)) {
        inside = false;
        break;
      }
    if (inside) kept.push_back(m);
  }
  return RPoly::from_monomials(std::move(kept));
}

namespace {

struct LimitSystem {
  std::vector<int> site_ns;
  std::vector<std::vector<Monomial>> bases;
  std::vector<std::size_t> offsets;
  std::size_t total_vars = 0;
  gf2::BitMatrix constraints;
};

std::size_t index_of(const std::vector<Monomial>& basis_list, const Monomial& m) {
  auto pos = std::lower_bound(basis_list.begin(), basis_list.end(), m);
  if (pos == basis_list.end() || !(*pos == m))
    throw std::logic_error("monomial missing from a site basis");
  return static_cast<std::size_t>(pos - basis_list.begin());
}

LimitSystem build_system(Bidegree bd, const Limits& lim) {
  if (bd.sigma < 0 || bd.d < 0) throw std::invalid_argument("bidegree must be nonnegative");
  LimitSystem sys;

  // sites beyond t_max have every generator above degree d, hence empty
  // bases here, and intersections with them carry no constraints
  int t_max = 0;
  for (int t = 1; t <= 63 && mersenne(t) <= bd.d; ++t) t_max = t;
  t_max = std::max(t_max, 1);
  for (int n = 1; n <= t_max; ++n) sys.site_ns.push_back(n);

  for (int n : sys.site_ns) {
    sys.offsets.push_back(sys.total_vars);
    sys.bases.push_back(site_basis(ElementarySite::maximal(n), bd, lim));
    sys.total_vars += sys.bases.back().size();
  }

  std::size_t rows = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<Monomial>>> pairs;
  for (std::size_t a = 0; a < sys.site_ns.size(); ++a)
    for (std::size_t b = a + 1; b < sys.site_ns.size(); ++b) {
      auto inter = site_basis(
          ElementarySite::intersection(sys.site_ns[a], sys.site_ns[b]), bd, lim);
      rows += inter.size();
      pairs.push_back({a, b, std::move(inter)});
    }

  sys.constraints = gf2::BitMatrix(rows, sys.total_vars);
  std::size_t r = 0;
  for (const auto& [a, b, inter] : pairs)
    for (const Monomial& c : inter) {
      // restriction acts as identity-or-zero on monomials, so agreement on
      // the intersection pins the matching coordinates to each other
      sys.constraints.set(r, sys.offsets[a] + index_of(sys.bases[a], c), true);
      sys.constraints.set(r, sys.offsets[b] + index_of(sys.bases[b], c), true);
      ++r;
    }
  return sys;
}

}  // namespace

LimitSpace limit_space(Bidegree bd, const Limits& lim) {
  LimitSystem sys = build_system(bd, lim);
  LimitSpace out;
  out.bidegree = bd;
  out.site_ns = sys.site_ns;
  out.site_bases = sys.bases;

  const auto kernel = nullspace(sys.constraints);
  out.dim = static_cast<std::int64_t>(kernel.size());
  for (const auto& v : kernel) {
    CompatibleFamily fam;
    for (std::size_t a = 0; a < sys.site_ns.size(); ++a) {
      std::vector<Monomial> ms;
      for (std::size_t j = 0; j < sys.bases[a].size(); ++j)
        if (v.get(sys.offsets[a] + j)) ms.push_back(sys.bases[a][j]);
      fam.components.push_back({sys.site_ns[a], RPoly::from_monomials(std::move(ms))});
    }
    out.families.push_back(std::move(fam));
  }
  return out;
}

CompareVerdict compare_with_closed_form(Bidegree bd, const Limits& lim) {
  LimitSystem sys = build_system(bd, lim);
  const auto ring_basis = basis(bd, lim);

  CompareVerdict v;
  v.bidegree = bd;
  v.ring_dim = static_cast<std::int64_t>(ring_basis.size());
  v.site_ns = sys.site_ns;

  std::vector<gf2::BitVector> images;
  bool well_defined = true;
  for (const Monomial& m : ring_basis) {
    gf2::BitVector y(sys.total_vars);
    for (std::size_t a = 0; a < sys.site_ns.size(); ++a) {
      const ElementarySite site = ElementarySite::maximal(sys.site_ns[a]);
      bool inside = true;
      for (const auto& f : m.factors())
        if (!site.contains(f.g)) {
          inside = false;
          break;
        }
      if (inside) y.set(sys.offsets[a] + index_of(sys.bases[a], m), true);
    }
    if (mat_vec(sys.constraints, y).any()) well_defined = false;
    images.push_back(std::move(y));
  }

  const std::size_t limit_dim = nullspace(sys.constraints).size();
  v.limit_dim = static_cast<std::int64_t>(limit_dim);
  v.well_defined = well_defined;

  std::size_t image_rank = 0;
  if (!images.empty()) image_rank = gf2::rank(gf2::BitMatrix::from_rows(images));
  v.injective = image_rank == ring_basis.size();
  v.surjective = well_defined && image_rank == limit_dim;
  return v;
}

std::string CompareVerdict::str() const {
  std::string sites;
  for (int n : site_ns) sites += (sites.empty() ? "" : ",") + std::to_string(n);
  std::string out = to_string(bidegree) + " ring_dim=" + std::to_string(ring_dim) +
                    " limit_dim=" + std::to_string(limit_dim) + " sites={" + sites + "}";
  out += iso() ? " verdict=iso" : " verdict=mismatch";
  if (!iso()) {
    out += well_defined ? "" : " (not well-defined)";
    out += injective ? "" : " (not injective)";
    out += surjective ? "" : " (not surjective)";
  }
  return out;
}

}  // namespace hts
