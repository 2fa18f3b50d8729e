#include "hts/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "hts/action.hpp"

namespace hts {

InvariantKernel invariant_kernel(Bidegree bd, const Limits& lim) {
  InvariantKernel out;
  out.ambient = basis(bd, lim);
  const std::size_t dim = out.ambient.size();
  out.monomial_invariant.assign(dim, 1);
  if (dim == 0) return out;

  std::vector<int> ks;
  for (int k = 0; k <= 62 && pow2(k) <= bd.d; ++k) ks.push_back(k);
  if (ks.empty()) {
    // d = 0: no operations constrain the space
    out.kernel = nullspace(gf2::BitMatrix(0, dim));
    return out;
  }
  const std::int64_t cap = pow2(ks.back());

  std::vector<std::vector<Monomial>> targets;
  std::vector<std::size_t> offsets;
  std::size_t rows = 0;
  for (int k : ks) {
    targets.push_back(basis({bd.sigma, bd.d - pow2(k)}, lim));
    offsets.push_back(rows);
    rows += targets.back().size();
  }

  gf2::BitMatrix mat(rows, dim);
  std::vector<char> k_used(ks.size(), 0);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto table = sq_sparse(out.ambient[j], cap);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      auto it = table.find(pow2(ks[ki]));
      if (it == table.end() || it->second.is_zero()) continue;
      out.monomial_invariant[j] = 0;
      k_used[ki] = 1;
      const auto& tgt = targets[ki];
      for (const Monomial& m : it->second.terms()) {
        auto pos = std::lower_bound(tgt.begin(), tgt.end(), m);
        if (pos == tgt.end() || !(*pos == m))
          throw std::logic_error("Sq image escaped the target basis");
        mat.set(offsets[ki] + static_cast<std::size_t>(pos - tgt.begin()), j, true);
      }
    }
  }
  for (std::size_t ki = 0; ki < ks.size(); ++ki)
    if (k_used[ki]) out.constraining_ks.push_back(ks[ki]);
  out.kernel = nullspace(mat);
  return out;
}

InvariantReport invariant_subspace(Bidegree bd, const Limits& lim) {
  InvariantKernel k = invariant_kernel(bd, lim);
  InvariantReport r;
  r.bidegree = bd;
  r.ambient_dim = static_cast<std::int64_t>(k.ambient.size());
  r.invariant_dim = static_cast<std::int64_t>(k.kernel.size());
  r.constraining_ks = k.constraining_ks;
  for (const auto& v : k.kernel) {
    std::vector<Monomial> ms;
    for (std::size_t j = 0; j < k.ambient.size(); ++j)
      if (v.get(j)) ms.push_back(k.ambient[j]);
    r.invariant_basis.push_back(RPoly::from_monomials(std::move(ms)));
  }
  for (std::size_t j = 0; j < k.ambient.size(); ++j)
    if (k.monomial_invariant[j]) r.monomial_invariants.push_back(k.ambient[j]);
  return r;
}

bool is_invariant(const RPoly& p) {
  for (const auto& [bd, comp] : p.components())
    for (int k = 0; k <= 62 && pow2(k) <= bd.d; ++k)
      if (!sq_n(pow2(k), comp).is_zero()) return false;
  return true;
}

bool classify_monomial(const Monomial& m) {
  if (m.is_unit()) return true;
  const int n = m.factors().front().g.t;
  for (const auto& f : m.factors())
    if (f.g.t != n) return false;
  return m.exponent_of(Generator(n, n - 1)) >= 1;
}

std::vector<InvariantReport> scan(std::int64_t sigma_max, std::int64_t d_max, const Limits& lim,
                                  int jobs) {
  if (sigma_max < 0 || d_max < 0) throw std::invalid_argument("window must be nonnegative");
  if (d_max > lim.max_d) throw ResourceLimitError("scan window exceeds the configured cap");

  std::vector<Bidegree> bds;
  for (std::int64_t sigma = 0; sigma <= sigma_max; ++sigma)
    for (std::int64_t d = 0; d <= d_max; ++d) bds.push_back({sigma, d});

  std::vector<InvariantReport> out(bds.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < bds.size(); ++i) out[i] = invariant_subspace(bds[i], lim);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= bds.size() || failed.load()) return;
      try {
        out[i] = invariant_subspace(bds[i], lim);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

Monomial FamilyDescriptor::monomial() const {
  std::vector<Monomial::Factor> fs;
  for (std::size_t j = 0; j < exponents.size(); ++j)
    if (exponents[j] > 0) fs.push_back({Generator(n, static_cast<int>(j)), exponents[j]});
  return *Monomial::make(std::move(fs));
}

std::vector<Monomial> family_monomials(int n, std::int64_t d_max) {
  if (n < 1) throw std::invalid_argument("family index must be >= 1");
  std::vector<std::int64_t> degs;
  for (int s = 0; s < n; ++s) degs.push_back(Generator(n, s).internal_degree());

  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(n, 0);
  // descend over s = n-1 first so the top exponent is pinned >= 1 cheaply
  auto rec = [&](auto&& self, int s, std::int64_t rem) -> void {
    if (s < 0) {
      FamilyDescriptor fd{n, exps};
      out.push_back(fd.monomial());
      return;
    }
    const std::int64_t lo = (s == n - 1) ? 1 : 0;
    for (std::int64_t e = lo; e * degs[s] <= rem; ++e) {
      exps[s] = static_cast<std::uint32_t>(e);
      self(self, s - 1, rem - e * degs[s]);
    }
    exps[s] = 0;
  };
  if (degs[n - 1] <= d_max) rec(rec, n - 1, d_max);
  std::sort(out.begin(), out.end());
  return out;
}

MinimalSupportResult minimal_support_invariant(Bidegree bd, std::span<const Generator> allowed,
                                               const Limits& lim) {
  InvariantKernel k = invariant_kernel(bd, lim);
  MinimalSupportResult res;
  if (k.kernel.empty()) return res;

  std::set<Generator> allow(allowed.begin(), allowed.end());
  std::vector<std::size_t> blocked;
  for (std::size_t j = 0; j < k.ambient.size(); ++j)
    for (const auto& f : k.ambient[j].factors())
      if (!allow.count(f.g)) {
        blocked.push_back(j);
        break;
      }

  // combinations of kernel vectors vanishing on every blocked coordinate
  gf2::BitMatrix z(blocked.size(), k.kernel.size());
  for (std::size_t r = 0; r < blocked.size(); ++r)
    for (std::size_t c = 0; c < k.kernel.size(); ++c)
      if (k.kernel[c].get(blocked[r])) z.set(r, c, true);
  const auto combos = nullspace(z);
  res.subspace_dim = static_cast<std::int64_t>(combos.size());
  if (combos.empty()) return res;
  res.found = true;

  std::vector<gf2::BitVector> gens;
  for (const auto& c : combos) {
    gf2::BitVector w(k.ambient.size());
    for (std::size_t i = 0; i < k.kernel.size(); ++i)
      if (c.get(i)) w ^= k.kernel[i];
    gens.push_back(std::move(w));
  }

  gf2::BitVector best;
  if (combos.size() <= 20) {
    // gray-code walk over all nonzero combinations
    gf2::BitVector cur(k.ambient.size());
    std::uint64_t prev = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gens.size()); ++mask) {
      const std::uint64_t gray = mask ^ (mask >> 1);
      const std::uint64_t delta = gray ^ prev;
      cur ^= gens[static_cast<std::size_t>(std::countr_zero(delta))];
      prev = gray;
      if (!cur.any()) continue;
      if (best.size() == 0 || cur.popcount() < best.popcount() ||
          (cur.popcount() == best.popcount() && gf2::lex_less(cur, best)))
        best = cur;
    }
  } else {
    res.exhaustive = false;
    gf2::BitMatrix m = gf2::BitMatrix::from_rows(gens);
    m = gf2::rref(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      gf2::BitVector v = m.row(r);
      if (!v.any()) continue;
      if (best.size() == 0 || v.popcount() < best.popcount() ||
          (v.popcount() == best.popcount() && gf2::lex_less(v, best)))
        best = v;
    }
  }

  std::vector<Monomial> ms;
  for (std::size_t j = 0; j < k.ambient.size(); ++j)
    if (best.get(j)) ms.push_back(k.ambient[j]);
  res.representative = RPoly::from_monomials(std::move(ms));
  return res;
}

}  // namespace hts
