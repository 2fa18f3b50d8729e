#include "hts/dual.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hts {

XiMonomial XiMonomial::xi(int index, std::uint64_t e) { return make({{index, e}}); }

XiMonomial XiMonomial::make(std::vector<std::pair<int, std::uint64_t>> factors) {
  std::erase_if(factors, [](const auto& f) { return f.second == 0; });
  for (const auto& [i, e] : factors)
    if (i < 1) throw std::invalid_argument("xi index must be >= 1");
  std::sort(factors.begin(), factors.end());
  XiMonomial m;
  for (auto& [i, e] : factors) {
    if (!m.f_.empty() && m.f_.back().first == i) {
      std::uint64_t sum = m.f_.back().second + e;
      if (sum < e) throw OverflowError("xi exponent out of range");
      m.f_.back().second = sum;
    } else {
      m.f_.push_back({i, e});
    }
  }
  return m;
}

std::int64_t XiMonomial::degree() const {
  std::int64_t d = 0;
  for (const auto& [i, e] : f_) {
    if (e > static_cast<std::uint64_t>(INT64_MAX)) throw OverflowError("xi exponent out of range");
    d = checked_add(d, checked_mul(static_cast<std::int64_t>(e), mersenne(i)));
  }
  return d;
}

XiMonomial XiMonomial::operator*(const XiMonomial& o) const {
  std::vector<std::pair<int, std::uint64_t>> fs = f_;
  fs.insert(fs.end(), o.f_.begin(), o.f_.end());
  return make(std::move(fs));
}

XiMonomial XiMonomial::frobenius(int k) const {
  if (k < 0 || k > 63) throw OverflowError("frobenius power out of range");
  XiMonomial m = *this;
  for (auto& [i, e] : m.f_) {
    if (k > 0 && e > (UINT64_MAX >> k)) throw OverflowError("xi exponent out of range");
    e <<= k;
  }
  return m;
}

std::optional<std::uint64_t> XiMonomial::xi1_power() const {
  if (f_.empty()) return 0;
  if (f_.size() == 1 && f_[0].first == 1) return f_[0].second;
  return std::nullopt;
}

int XiMonomial::cmp(const XiMonomial& a, const XiMonomial& b) {
  const std::int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first != b.f_[j].first) return a.f_[i].first < b.f_[j].first ? -1 : 1;
    if (a.f_[i].second != b.f_[j].second) return a.f_[i].second > b.f_[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  if (i == a.f_.size() && j == b.f_.size()) return 0;
  return i == a.f_.size() ? -1 : 1;
}

std::string XiMonomial::str() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [i, e] : f_) {
    if (!out.empty()) out += "*";
    out += "xi[" + std::to_string(i) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

DualPoly DualPoly::from_monomials(std::vector<XiMonomial> ms) {
  std::sort(ms.begin(), ms.end());
  DualPoly p;
  std::size_t i = 0;
  while (i < ms.size()) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) & 1u) p.t_.push_back(std::move(ms[i]));
    i = j;
  }
  return p;
}

bool DualPoly::contains(const XiMonomial& m) const {
  return std::binary_search(t_.begin(), t_.end(), m);
}

DualPoly& DualPoly::operator+=(const DualPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<XiMonomial> ms = t_;
  ms.insert(ms.end(), o.t_.begin(), o.t_.end());
  *this = from_monomials(std::move(ms));
  return *this;
}

DualPoly operator*(const DualPoly& a, const DualPoly& b) {
  std::vector<XiMonomial> ms;
  ms.reserve(a.t_.size() * b.t_.size());
  for (const XiMonomial& ma : a.t_)
    for (const XiMonomial& mb : b.t_) ms.push_back(ma * mb);
  return DualPoly::from_monomials(std::move(ms));
}

DualPoly DualPoly::pow(std::uint64_t e) const {
  DualPoly acc{XiMonomial()};
  DualPoly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base.frobenius(1);
  }
  return acc;
}

DualPoly DualPoly::frobenius(int k) const {
  std::vector<XiMonomial> ms;
  ms.reserve(t_.size());
  for (const XiMonomial& m : t_) ms.push_back(m.frobenius(k));
  return from_monomials(std::move(ms));
}

std::string DualPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const XiMonomial& m : t_) {
    if (!out.empty()) out += " + ";
    out += m.str();
  }
  return out;
}

namespace {

bool term_less(const DualTensor::Term& a, const DualTensor::Term& b) {
  int c = XiMonomial::cmp(a.first, b.first);
  if (c != 0) return c < 0;
  return XiMonomial::cmp(a.second, b.second) < 0;
}

}  // namespace

DualTensor DualTensor::term(XiMonomial a, XiMonomial b) {
  DualTensor t;
  t.t_.push_back({std::move(a), std::move(b)});
  return t;
}

DualTensor DualTensor::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), term_less);
  DualTensor out;
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if ((j - i) & 1u) out.t_.push_back(std::move(ts[i]));
    i = j;
  }
  return out;
}

DualTensor& DualTensor::operator+=(const DualTensor& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> ts = t_;
  ts.insert(ts.end(), o.t_.begin(), o.t_.end());
  *this = from_terms(std::move(ts));
  return *this;
}

DualTensor operator*(const DualTensor& a, const DualTensor& b) {
  std::vector<DualTensor::Term> ts;
  ts.reserve(a.t_.size() * b.t_.size());
  for (const auto& ta : a.t_)
    for (const auto& tb : b.t_) ts.push_back({ta.first * tb.first, ta.second * tb.second});
  return DualTensor::from_terms(std::move(ts));
}

DualTensor DualTensor::pow(std::uint64_t e) const {
  DualTensor acc = term(XiMonomial(), XiMonomial());
  DualTensor base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) {
      std::vector<Term> sq;
      sq.reserve(base.t_.size());
      for (const Term& t : base.t_) sq.push_back({t.first.frobenius(1), t.second.frobenius(1)});
      base = from_terms(std::move(sq));
    }
  }
  return acc;
}

std::string DualTensor::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const Term& t : t_) {
    if (!out.empty()) out += " + ";
    out += t.first.str() + " (x) " + t.second.str();
  }
  return out;
}

DualTensor diagonal_xi(int n) {
  if (n < 0) throw std::invalid_argument("xi index must be >= 0");
  std::vector<DualTensor::Term> ts;
  for (int i = 0; i <= n; ++i) {
    XiMonomial left = (n - i == 0) ? XiMonomial() : XiMonomial::xi(n - i).frobenius(i);
    XiMonomial right = (i == 0) ? XiMonomial() : XiMonomial::xi(i);
    ts.push_back({std::move(left), std::move(right)});
  }
  return DualTensor::from_terms(std::move(ts));
}

DualTensor diagonal(const DualPoly& p) {
  DualTensor out;
  for (const XiMonomial& m : p.terms()) {
    DualTensor acc = DualTensor::term(XiMonomial(), XiMonomial());
    for (const auto& [i, e] : m.factors()) acc = acc * diagonal_xi(i).pow(e);
    out += acc;
  }
  return out;
}

const DualPoly& conjugate_xi(int n) {
  if (n < 0) throw std::invalid_argument("xi index must be >= 0");
  // deque keeps references stable while deeper values are appended
  thread_local std::deque<DualPoly> memo;
  if (memo.empty()) memo.push_back(DualPoly(XiMonomial()));  // chi(1) = 1
  while (static_cast<int>(memo.size()) <= n) {
    const int k = static_cast<int>(memo.size());
    DualPoly acc;
    for (int i = 0; i < k; ++i)
      acc += DualPoly(XiMonomial::xi(k - i).frobenius(i)) * memo[i];
    memo.push_back(std::move(acc));
  }
  return memo[n];
}

DualPoly conjugation(const DualPoly& p) {
  DualPoly out;
  for (const XiMonomial& m : p.terms()) {
    DualPoly acc{XiMonomial()};
    for (const auto& [i, e] : m.factors()) acc = acc * conjugate_xi(i).pow(e);
    out += acc;
  }
  return out;
}

int milnor_coefficient(const DualPoly& p, std::uint64_t n) {
  XiMonomial target = (n == 0) ? XiMonomial() : XiMonomial::xi(1, n);
  return p.contains(target) ? 1 : 0;
}

}  // namespace hts
