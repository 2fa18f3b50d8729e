#pragma once

// Deliberately slow reference implementations, kept structurally different
// from the library code they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hts/ring.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;  // entries 0/1

inline Grid rref(Grid m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][lead] == 0) ++pivot;
    if (pivot == rows) {
      ++lead;
      --r;
      continue;
    }
    std::swap(m[pivot], m[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][lead])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
    ++lead;
  }
  return m;
}

inline std::size_t rank(const Grid& m) {
  Grid r = rref(m);
  std::size_t count = 0;
  for (const auto& row : r)
    if (std::any_of(row.begin(), row.end(), [](int x) { return x != 0; })) ++count;
  return count;
}

// All admissible monomials at a bidegree, by an unpruned odometer over
// exponent vectors followed by explicit pairwise admissibility tests.
inline std::vector<hts::Monomial> basis(hts::Bidegree bd) {
  const auto gens = hts::generators_up_to(bd.d);
  std::vector<hts::Monomial> found;
  std::vector<std::uint32_t> exp(gens.size(), 0);

  auto admissible = [&]() {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (exp[i] && exp[j] && gens[i].s >= gens[j].t) return false;
    return true;
  };

  std::int64_t sigma = 0, d = 0;
  while (true) {
    if (sigma == bd.sigma && d == bd.d && admissible()) {
      std::vector<hts::Monomial::Factor> fs;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (exp[i]) fs.push_back({gens[i], exp[i]});
      found.push_back(*hts::Monomial::make(std::move(fs)));
    }
    // advance the odometer; a digit saturates once sigma or d passes the target
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      const auto gd = gens[i].internal_degree();
      if (sigma < bd.sigma && d + gd <= bd.d) {
        ++exp[i];
        ++sigma;
        d += gd;
        break;
      }
      sigma -= exp[i];
      d -= static_cast<std::int64_t>(exp[i]) * gd;
      exp[i] = 0;
    }
    if (i == gens.size()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace oracle
