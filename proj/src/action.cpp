#include "hts/action.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace hts {

RPoly sq_pow2_on_generator(int k, Generator g) {
  if (k < 0) throw std::invalid_argument("Sq power index must be >= 0");
  RPoly out;
  if (k == g.s && g.s + 1 < g.t - 1)
    out += RPoly(Monomial::generator(Generator(g.t - 1, g.s + 1)));
  if (k == g.s + g.t - 1 && g.s < g.t - 1)
    out += RPoly(Monomial::generator(Generator(g.t - 1, g.s)));
  return out;
}

RPoly sq_n_on_generator(std::int64_t n, Generator g) {
  if (n < 0) throw std::invalid_argument("Sq index must be >= 0");
  const int t = g.t, s = g.s;
  RPoly out;

  // n = 2^{s+j} - 2^s
  {
    const std::uint64_t x = static_cast<std::uint64_t>(n) + (std::uint64_t{1} << s);
    if (std::has_single_bit(x)) {
      const int j = std::countr_zero(x) - s;
      if (j >= 0 && s + j < t - j) out += RPoly(Monomial::generator(Generator(t - j, s + j)));
    }
  }
  // n = 2^{s+t-1} + 2^{s+j} - 2^s
  if (s + t - 1 <= 62) {
    const std::int64_t lead = pow2(s + t - 1);
    const std::int64_t y = n - lead + pow2(s);
    if (y > 0 && std::has_single_bit(static_cast<std::uint64_t>(y))) {
      const int j = std::countr_zero(static_cast<std::uint64_t>(y)) - s;
      if (j >= 0 && s + j < t - j - 1)
        out += RPoly(Monomial::generator(Generator(t - j - 1, s + j)));
    }
  }
  return out;
}

namespace {

// nonzero Sq^n values, ascending in n
using SqTable = std::vector<std::pair<std::int64_t, RPoly>>;

SqTable generator_table(Generator g) {
  SqTable tb;
  tb.push_back({0, RPoly(Monomial::generator(g))});
  for (int j = 1; g.s + j < g.t - j; ++j)
    tb.push_back({pow2(g.s + j) - pow2(g.s),
                  RPoly(Monomial::generator(Generator(g.t - j, g.s + j)))});
  if (g.s + g.t - 1 <= 62)
    for (int j = 0; g.s + j < g.t - j - 1; ++j)
      tb.push_back({pow2(g.s + g.t - 1) + pow2(g.s + j) - pow2(g.s),
                    RPoly(Monomial::generator(Generator(g.t - j - 1, g.s + j)))});
  std::sort(tb.begin(), tb.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < tb.size(); ++i) assert(tb[i].first > tb[i - 1].first);
  return tb;
}

SqTable convolve(const SqTable& a, const SqTable& b) {
  std::map<std::int64_t, RPoly> acc;
  for (const auto& [na, pa] : a)
    for (const auto& [nb, pb] : b) {
      RPoly prod = pa * pb;
      if (prod.is_zero()) continue;
      auto& slot = acc[checked_add(na, nb)];
      slot += prod;
    }
  SqTable out;
  for (auto& [n, p] : acc)
    if (!p.is_zero()) out.push_back({n, std::move(p)});
  return out;
}

struct PowKey {
  int t, s;
  std::uint32_t e;
  friend bool operator==(const PowKey&, const PowKey&) = default;
};
struct PowKeyHash {
  std::size_t operator()(const PowKey& k) const {
    return (static_cast<std::size_t>(k.t) << 40) ^ (static_cast<std::size_t>(k.s) << 32) ^ k.e;
  }
};

// full sparse table of Sq^n(g^e); entries stay sparse because each generator
// admits few nonzero operations
const SqTable& sq_power_table(Generator g, std::uint32_t e) {
  thread_local std::unordered_map<PowKey, SqTable, PowKeyHash> memo;
  const PowKey key{g.t, g.s, e};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  SqTable tb;
  if (e == 1)
    tb = generator_table(g);
  else
    tb = convolve(sq_power_table(g, e - 1), sq_power_table(g, 1));
  return memo.emplace(key, std::move(tb)).first->second;
}

}  // namespace

std::map<std::int64_t, RPoly> sq_sparse(const Monomial& m, std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("Sq cap must be >= 0");
  std::map<std::int64_t, RPoly> acc;
  acc[0] = RPoly(Monomial());
  for (const auto& f : m.factors()) {
    const SqTable& tb = sq_power_table(f.g, f.e);
    std::map<std::int64_t, RPoly> next;
    for (const auto& [n1, p1] : acc)
      for (const auto& [n2, p2] : tb) {
        if (n2 > cap - n1) break;  // tb is ascending in n; acc keys never exceed cap
        const std::int64_t n = n1 + n2;
        RPoly prod = p1 * p2;
        if (prod.is_zero()) continue;
        next[n] += prod;
      }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    acc = std::move(next);
  }
  return acc;
}

RPoly sq_n(std::int64_t n, const RPoly& p) {
  if (n < 0) throw std::invalid_argument("Sq index must be >= 0");
  if (n == 0) return p;
  RPoly out;
  for (const Monomial& m : p.terms()) {
    auto tb = sq_sparse(m, n);
    auto it = tb.find(n);
    if (it != tb.end()) out += it->second;
  }
  return out;
}

RPoly total_sq(const RPoly& p, std::int64_t degree_window) {
  if (p.is_zero()) return p;
  Bidegree bd;
  if (!p.is_homogeneous(&bd))
    throw std::invalid_argument("total square requires a homogeneous input");
  if (bd.d > degree_window) throw ResourceLimitError("degree exceeds the requested window");
  RPoly out;
  for (const Monomial& m : p.terms())
    for (const auto& [n, q] : sq_sparse(m, bd.d)) {
      (void)n;
      out += q;
    }
  return out;
}

namespace {

bool coterm_less(const CoactionValue::Term& a, const CoactionValue::Term& b) {
  int c = XiMonomial::cmp(a.first, b.first);
  if (c != 0) return c < 0;
  return Monomial::cmp(a.second, b.second) < 0;
}

}  // namespace

CoactionValue CoactionValue::term(XiMonomial a, Monomial m) {
  CoactionValue v;
  v.t_.push_back({std::move(a), std::move(m)});
  return v;
}

CoactionValue CoactionValue::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), coterm_less);
  CoactionValue out;
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if ((j - i) & 1u) out.t_.push_back(std::move(ts[i]));
    i = j;
  }
  return out;
}

CoactionValue& CoactionValue::operator+=(const CoactionValue& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> ts = t_;
  ts.insert(ts.end(), o.t_.begin(), o.t_.end());
  *this = from_terms(std::move(ts));
  return *this;
}

CoactionValue operator*(const CoactionValue& a, const CoactionValue& b) {
  std::vector<CoactionValue::Term> ts;
  ts.reserve(a.t_.size() * b.t_.size());
  for (const auto& ta : a.t_)
    for (const auto& tb : b.t_)
      if (auto m = Monomial::mul(ta.second, tb.second))
        ts.push_back({ta.first * tb.first, std::move(*m)});
  return CoactionValue::from_terms(std::move(ts));
}

CoactionValue CoactionValue::pow(std::uint64_t e) const {
  CoactionValue acc = term(XiMonomial(), Monomial());
  CoactionValue base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) {
      std::vector<Term> sq;
      sq.reserve(base.t_.size());
      for (const Term& t : base.t_) sq.push_back({t.first.frobenius(1), t.second.pow(2)});
      base = from_terms(std::move(sq));
    }
  }
  return acc;
}

RPoly CoactionValue::xi1_component(std::uint64_t n) const {
  std::vector<Monomial> ms;
  for (const Term& t : t_)
    if (auto p = t.first.xi1_power(); p && *p == n) ms.push_back(t.second);
  return RPoly::from_monomials(std::move(ms));
}

std::map<std::uint64_t, RPoly> CoactionValue::xi1_spectrum() const {
  std::map<std::uint64_t, std::vector<Monomial>> buckets;
  for (const Term& t : t_)
    if (auto p = t.first.xi1_power()) buckets[*p].push_back(t.second);
  std::map<std::uint64_t, RPoly> out;
  for (auto& [n, ms] : buckets) {
    RPoly q = RPoly::from_monomials(std::move(ms));
    if (!q.is_zero()) out.emplace(n, std::move(q));
  }
  return out;
}

std::string CoactionValue::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const Term& t : t_) {
    if (!out.empty()) out += " + ";
    out += t.first.str() + " (x) " + t.second.str();
  }
  return out;
}

CoactionValue coaction_generator(Generator g) {
  thread_local std::map<std::pair<int, int>, CoactionValue> memo;
  auto it = memo.find({g.t, g.s});
  if (it != memo.end()) return it->second;

  const int t = g.t, s = g.s;
  std::vector<CoactionValue::Term> ts;
  // j is capped where the i-range j+s+1 <= i <= t-j empties out
  for (int j = 0; 2 * j <= t - s - 1; ++j) {
    const DualPoly zeta_pow = conjugate_xi(j).frobenius(s);
    for (int i = j + s + 1; i <= t - j; ++i) {
      const XiMonomial xi_factor =
          (t - i - j == 0) ? XiMonomial() : XiMonomial::xi(t - i - j).frobenius(i + j + s);
      const Monomial target = Monomial::generator(Generator(i, j + s));
      for (const XiMonomial& zm : zeta_pow.terms()) ts.push_back({zm * xi_factor, target});
    }
  }
  CoactionValue out = CoactionValue::from_terms(std::move(ts));
  memo.emplace(std::make_pair(g.t, g.s), out);
  return out;
}

CoactionValue coaction(const RPoly& p) {
  CoactionValue out;
  for (const Monomial& m : p.terms()) {
    CoactionValue acc = CoactionValue::term(XiMonomial(), Monomial());
    for (const auto& f : m.factors()) acc = acc * coaction_generator(f.g).pow(f.e);
    out += acc;
  }
  return out;
}

RPoly sq_via_coaction(std::int64_t n, const RPoly& p) {
  if (n < 0) throw std::invalid_argument("Sq index must be >= 0");
  return coaction(p).xi1_component(static_cast<std::uint64_t>(n));
}

std::string RawCoactionTerm::str() const {
  std::string out;
  if (zeta_index > 0) {
    out += "zeta[" + std::to_string(zeta_index) + "]";
    if (zeta_exp != 1) out += "^" + std::to_string(zeta_exp);
  }
  if (xi_index > 0) {
    if (!out.empty()) out += "*";
    out += "xi[" + std::to_string(xi_index) + "]";
    if (xi_exp != 1) out += "^" + std::to_string(xi_exp);
  }
  if (out.empty()) out = "1";
  return out + " (x) " + to_string(target);
}

std::vector<RawCoactionTerm> coaction_generator_raw(Generator g) {
  const int t = g.t, s = g.s;
  std::vector<RawCoactionTerm> out;
  for (int j = 0; 2 * j <= t - s - 1; ++j)
    for (int i = j + s + 1; i <= t - j; ++i) {
      RawCoactionTerm term{j, static_cast<std::uint64_t>(pow2(s)), t - i - j, 0,
                           Generator(i, j + s)};
      if (term.xi_index > 0) term.xi_exp = std::uint64_t{1} << (i + j + s);
      out.push_back(term);
    }
  return out;
}

bool coaction_coassociative(Generator g) {
  using Triple = std::tuple<XiMonomial, XiMonomial, Monomial>;
  auto norm = [](std::vector<Triple> v) {
    auto less = [](const Triple& a, const Triple& b) {
      int c = XiMonomial::cmp(std::get<0>(a), std::get<0>(b));
      if (c != 0) return c < 0;
      c = XiMonomial::cmp(std::get<1>(a), std::get<1>(b));
      if (c != 0) return c < 0;
      return Monomial::cmp(std::get<2>(a), std::get<2>(b)) < 0;
    };
    std::sort(v.begin(), v.end(), less);
    std::vector<Triple> out;
    std::size_t i = 0;
    while (i < v.size()) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if ((j - i) & 1u) out.push_back(v[i]);
      i = j;
    }
    return out;
  };

  const CoactionValue psi = coaction_generator(g);
  std::vector<Triple> lhs, rhs;
  for (const auto& [a, m] : psi.terms()) {
    const DualTensor da = diagonal(DualPoly(a));
    for (const auto& [x, y] : da.terms()) lhs.push_back({x, y, m});
    const CoactionValue pm = coaction(RPoly(m));
    for (const auto& [b, m2] : pm.terms()) rhs.push_back({a, b, m2});
  }
  return norm(std::move(lhs)) == norm(std::move(rhs));
}

}  // namespace hts
