#include "hts/ring.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace hts {

std::string to_string(const Bidegree& bd) {
  return "(" + std::to_string(bd.sigma) + "," + std::to_string(bd.d) + ")";
}

Generator::Generator(int t_, int s_) : t(t_), s(s_) {
  if (t < 1 || s < 0 || s >= t)
    throw std::invalid_argument("generator h[" + std::to_string(t_) + "," + std::to_string(s_) +
                                "] requires 0 <= s < t");
}

std::int64_t Generator::internal_degree() const { return checked_mul(pow2(s), mersenne(t)); }

Bidegree generator_degree(Generator g) { return {1, g.internal_degree()}; }

std::string to_string(Generator g) {
  return "h[" + std::to_string(g.t) + "," + std::to_string(g.s) + "]";
}

std::optional<Monomial> Monomial::make(std::vector<Factor> factors) {
  std::erase_if(factors, [](const Factor& f) { return f.e == 0; });
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.g < b.g; });
  std::vector<Factor> merged;
  for (const Factor& f : factors) {
    if (!merged.empty() && merged.back().g == f.g) {
      std::uint64_t e = std::uint64_t{merged.back().e} + f.e;
      if (e > UINT32_MAX) throw OverflowError("monomial exponent out of range");
      merged.back().e = static_cast<std::uint32_t>(e);
    } else {
      merged.push_back(f);
    }
  }
  if (!merged.empty()) {
    int max_s = 0, min_t = INT_MAX;
    for (const Factor& f : merged) {
      max_s = std::max(max_s, f.g.s);
      min_t = std::min(min_t, f.g.t);
    }
    if (max_s >= min_t) return std::nullopt;  // annihilated by the defining relations
  }
  Monomial m;
  m.f_ = std::move(merged);
  m.degree();  // force the overflow check at construction
  return m;
}

Monomial Monomial::generator(Generator g, std::uint32_t e) {
  auto m = make({{g, e}});
  return *m;  // a single generator power never violates the window
}

std::optional<Monomial> Monomial::mul(const Monomial& a, const Monomial& b) {
  std::vector<Factor> fs = a.f_;
  fs.insert(fs.end(), b.f_.begin(), b.f_.end());
  return make(std::move(fs));
}

Monomial Monomial::pow(std::uint64_t e) const {
  if (e == 0) return Monomial();
  std::vector<Factor> fs;
  fs.reserve(f_.size());
  for (const Factor& f : f_) {
    std::uint64_t x = f.e * e;
    if (e != 0 && (x / e != f.e || x > UINT32_MAX))
      throw OverflowError("monomial exponent out of range");
    fs.push_back({f.g, static_cast<std::uint32_t>(x)});
  }
  auto m = make(std::move(fs));
  return *m;  // same support as *this, so still admissible
}

Bidegree Monomial::degree() const {
  Bidegree bd;
  for (const Factor& f : f_) {
    bd.sigma = checked_add(bd.sigma, f.e);
    bd.d = checked_add(bd.d, checked_mul(f.e, f.g.internal_degree()));
  }
  return bd;
}

std::uint32_t Monomial::exponent_of(Generator g) const {
  for (const Factor& f : f_)
    if (f.g == g) return f.e;
  return 0;
}

int Monomial::min_t() const {
  int v = INT_MAX;
  for (const Factor& f : f_) v = std::min(v, f.g.t);
  return v;
}

int Monomial::max_s() const {
  int v = -1;
  for (const Factor& f : f_) v = std::max(v, f.g.s);
  return v;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  const Bidegree da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    const Factor& fa = a.f_[i];
    const Factor& fb = b.f_[j];
    if (fa.g != fb.g) return fa.g < fb.g ? -1 : 1;
    // same generator: the factor expansions diverge after the shared copies,
    // and the one holding more copies continues with the smaller entry
    if (fa.e != fb.e) return fa.e > fb.e ? -1 : 1;
    ++i;
    ++j;
  }
  if (i == a.f_.size() && j == b.f_.size()) return 0;
  return i == a.f_.size() ? -1 : 1;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const Factor& f : f_) {
    if (!out.empty()) out += "*";
    out += to_string(f.g);
    if (f.e != 1) out += "^" + std::to_string(f.e);
  }
  return out;
}

RPoly RPoly::from_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  RPoly p;
  std::size_t i = 0;
  while (i < ms.size()) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) & 1u) p.t_.push_back(std::move(ms[i]));
    i = j;
  }
  return p;
}

RPoly& RPoly::operator+=(const RPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<Monomial> ms = t_;
  ms.insert(ms.end(), o.t_.begin(), o.t_.end());
  *this = from_monomials(std::move(ms));
  return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  std::vector<Monomial> ms;
  ms.reserve(a.t_.size() * b.t_.size());
  for (const Monomial& ma : a.t_)
    for (const Monomial& mb : b.t_)
      if (auto m = Monomial::mul(ma, mb)) ms.push_back(std::move(*m));
  return RPoly::from_monomials(std::move(ms));
}

RPoly RPoly::pow(std::uint64_t e) const {
  RPoly acc{Monomial()};
  RPoly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) {
      // frobenius: squaring is termwise in characteristic 2
      std::vector<Monomial> sq;
      sq.reserve(base.t_.size());
      for (const Monomial& m : base.t_) sq.push_back(m.pow(2));
      base = from_monomials(std::move(sq));
    }
  }
  return acc;
}

bool RPoly::is_homogeneous(Bidegree* bd) const {
  if (t_.empty()) {
    if (bd) *bd = {0, 0};
    return true;
  }
  const Bidegree first = t_.front().degree();
  for (const Monomial& m : t_)
    if (m.degree() != first) return false;
  if (bd) *bd = first;
  return true;
}

std::map<Bidegree, RPoly> RPoly::components() const {
  std::map<Bidegree, RPoly> out;
  for (const Monomial& m : t_) out[m.degree()].t_.push_back(m);
  return out;
}

std::string RPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const Monomial& m : t_) {
    if (!out.empty()) out += " + ";
    out += m.str();
  }
  return out;
}

std::vector<Generator> generators_up_to(std::int64_t d) {
  std::vector<Generator> out;
  for (int t = 1; t <= 63 && mersenne(t) <= d; ++t)
    for (int s = 0; s < t; ++s) {
      Generator g(t, s);
      bool fits = true;
      try {
        fits = g.internal_degree() <= d;
      } catch (const OverflowError&) {
        fits = false;
      }
      if (fits)
        out.push_back(g);
      else
        break;  // degree grows with s
    }
  return out;
}

namespace {

struct BasisSearch {
  const std::vector<Generator>& gens;
  std::vector<std::int64_t> degs;
  std::vector<std::int64_t> suffix_min, suffix_max;
  bool admissible;
  std::int64_t cap;
  std::vector<Monomial::Factor> stack;
  std::vector<Monomial> out;

  void run(std::size_t idx, std::int64_t rem_sigma, std::int64_t rem_d, int max_s, int min_t) {
    if (rem_sigma == 0) {
      if (rem_d == 0) {
        auto m = Monomial::make(stack);
        if (!m)
          throw std::invalid_argument(
              "free enumeration over a generator set with inadmissible products");
        out.push_back(*m);
        if (static_cast<std::int64_t>(out.size()) > cap)
          throw ResourceLimitError("basis exceeds the ambient cap");
      }
      return;
    }
    if (idx == gens.size()) return;
    if (rem_d < rem_sigma * suffix_min[idx] || rem_d > rem_sigma * suffix_max[idx]) return;

    const Generator g = gens[idx];
    const std::int64_t gd = degs[idx];
    const bool ok = !admissible || (g.s < min_t && max_s < g.t);
    if (ok && gd <= rem_d) {
      std::int64_t emax = std::min<std::int64_t>(rem_sigma, rem_d / gd);
      for (std::int64_t e = emax; e >= 1; --e) {
        stack.push_back({g, static_cast<std::uint32_t>(e)});
        run(idx + 1, rem_sigma - e, rem_d - e * gd, std::max(max_s, g.s), std::min(min_t, g.t));
        stack.pop_back();
      }
    }
    run(idx + 1, rem_sigma, rem_d, max_s, min_t);
  }
};

}  // namespace

std::vector<Monomial> enumerate_monomials(const std::vector<Generator>& gens, Bidegree bd,
                                          bool enforce_admissibility, const Limits& lim) {
  if (bd.sigma < 0 || bd.d < 0) throw std::invalid_argument("bidegree must be nonnegative");
  if (bd.d > lim.max_d) throw ResourceLimitError("internal degree exceeds the configured cap");
  if (static_cast<std::int64_t>(gens.size()) > lim.max_generators)
    throw ResourceLimitError("generator list exceeds the configured cap");
  if (bd.sigma == 0) {
    if (bd.d == 0) return {Monomial()};
    return {};
  }
  if (bd.sigma > bd.d) return {};  // every generator has internal degree >= 1

  BasisSearch search{gens, {}, {}, {}, enforce_admissibility, lim.max_ambient, {}, {}};
  search.degs.reserve(gens.size());
  for (const Generator& g : gens) search.degs.push_back(g.internal_degree());
  const std::size_t n = gens.size();
  search.suffix_min.assign(n + 1, INT64_MAX);
  search.suffix_max.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    search.suffix_min[i] = std::min(search.suffix_min[i + 1], search.degs[i]);
    search.suffix_max[i] = std::max(search.suffix_max[i + 1], search.degs[i]);
  }
  search.run(0, bd.sigma, bd.d, -1, INT_MAX);
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

std::vector<Monomial> basis(Bidegree bd, const Limits& lim) {
  if (bd.sigma < 0 || bd.d < 0) throw std::invalid_argument("bidegree must be nonnegative");
  if (bd.d > lim.max_d) throw ResourceLimitError("internal degree exceeds the configured cap");
  return enumerate_monomials(generators_up_to(bd.d), bd, /*enforce_admissibility=*/true, lim);
}

}  // namespace hts
