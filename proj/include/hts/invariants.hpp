#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hts/gf2.hpp"
#include "hts/ring.hpp"

namespace hts {

struct InvariantReport {
  Bidegree bidegree;
  std::int64_t ambient_dim = 0;
  std::int64_t invariant_dim = 0;
  std::vector<RPoly> invariant_basis;        // reduced echelon form over the ambient basis
  std::vector<Monomial> monomial_invariants; // basis monomials that are themselves invariant
  std::vector<int> constraining_ks;          // k whose Sq^{2^k} matrix had a nonzero entry
};

// Ambient basis plus the kernel of the stacked Sq^{2^k} maps, 2^k <= d.
struct InvariantKernel {
  std::vector<Monomial> ambient;
  std::vector<gf2::BitVector> kernel;  // reduced echelon rows over the ambient basis
  std::vector<int> constraining_ks;
  std::vector<char> monomial_invariant;  // per ambient column
};
InvariantKernel invariant_kernel(Bidegree bd, const Limits& lim = {});

InvariantReport invariant_subspace(Bidegree bd, const Limits& lim = {});

// True iff every homogeneous component is killed by all Sq^{2^k}, 2^k <= d.
bool is_invariant(const RPoly& p);

// True iff m = 1, or all generators of m share one t-value n and the
// exponent of h[n,n-1] is >= 1.
bool classify_monomial(const Monomial& m);

// Reports for every bidegree with sigma <= sigma_max and d <= d_max, in
// canonical (sigma, d) order. jobs > 1 distributes bidegrees over threads;
// the merge order is deterministic either way.
std::vector<InvariantReport> scan(std::int64_t sigma_max, std::int64_t d_max,
                                  const Limits& lim = {}, int jobs = 1);

// Exponent tuple (i_0, ..., i_{n-1}) over h[n,0..n-1] with i_{n-1} >= 1.
struct FamilyDescriptor {
  int n = 1;
  std::vector<std::uint32_t> exponents;
  Monomial monomial() const;
};

// All family monomials for the given n with internal degree <= d_max.
std::vector<Monomial> family_monomials(int n, std::int64_t d_max);

struct MinimalSupportResult {
  bool found = false;
  std::int64_t subspace_dim = 0;  // invariants supported on the allowed generators
  bool exhaustive = true;         // full search vs greedy echelon pick
  RPoly representative;           // fewest monomials (ties broken canonically)
};

// Smallest-support nonzero invariant lying in the span of monomials whose
// generators all belong to `allowed`. Exhaustive when the subspace dimension
// is at most 20, otherwise a greedy echelon pick flagged as such.
MinimalSupportResult minimal_support_invariant(Bidegree bd, std::span<const Generator> allowed,
                                               const Limits& lim = {});

}  // namespace hts
