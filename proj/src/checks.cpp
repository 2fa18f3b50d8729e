#include "hts/checks.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "hts/action.hpp"
#include "hts/dual.hpp"
#include "hts/invariants.hpp"
#include "hts/limit.hpp"
#include "hts/parse.hpp"
#include "hts/ring.hpp"

namespace hts {
namespace {

RPoly gen(int t, int s) { return RPoly(Monomial::generator(Generator(t, s))); }

struct Checker {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, ok ? "" : detail});
  }

  template <typename T>
  void check_eq(const std::string& name, const T& got, const T& want) {
    if (got == want) {
      results.push_back({name, true, ""});
    } else {
      results.push_back({name, false, "got " + got.str() + ", want " + want.str()});
    }
  }
};

bool report_contains(const InvariantReport& r, const RPoly& p) {
  return std::find(r.invariant_basis.begin(), r.invariant_basis.end(), p) !=
         r.invariant_basis.end();
}

}  // namespace

std::vector<CheckResult> builtin_checks() {
  Checker c;

  // degrees and products
  c.check("degree h[1,0] is (1,1)", generator_degree(Generator(1, 0)) == Bidegree{1, 1});
  c.check("degree h[3,1] is (1,14)", generator_degree(Generator(3, 1)) == Bidegree{1, 14});
  c.check_eq("h[1,0]*h[2,1] collapses", gen(1, 0) * gen(2, 1), RPoly());
  c.check("h[2,0]*h[2,1] survives", !(gen(2, 0) * gen(2, 1)).is_zero());

  // dual coalgebra
  c.check_eq("diagonal of xi[1]",
             diagonal_xi(1),
             DualTensor::term(XiMonomial::xi(1), XiMonomial()) +
                 DualTensor::term(XiMonomial(), XiMonomial::xi(1)));
  c.check_eq("diagonal of xi[2]",
             diagonal_xi(2),
             DualTensor::term(XiMonomial::xi(2), XiMonomial()) +
                 DualTensor::term(XiMonomial::xi(1, 2), XiMonomial::xi(1)) +
                 DualTensor::term(XiMonomial(), XiMonomial::xi(2)));
  c.check_eq("conjugation is an involution on xi[3]",
             conjugation(conjugate_xi(3)), DualPoly(XiMonomial::xi(3)));
  c.check("xi[1]^7 appears in the conjugate of xi[3]",
          milnor_coefficient(conjugate_xi(3), 7) == 1);

  // squaring operations on generators
  c.check_eq("Sq^2 h[2,0] = h[1,0]", sq_pow2_on_generator(1, Generator(2, 0)), gen(1, 0));
  c.check_eq("Sq^2 h[2,1] = 0", sq_pow2_on_generator(1, Generator(2, 1)), RPoly());
  c.check_eq("Sq^4 h[2,1] = 0", sq_pow2_on_generator(2, Generator(2, 1)), RPoly());
  c.check_eq("Sq^8 h[4,0] = h[3,0]", sq_pow2_on_generator(3, Generator(4, 0)), gen(3, 0));
  c.check_eq("Sq^3 h[5,0] = h[3,2]", sq_n(3, gen(5, 0)), gen(3, 2));

  // Cartan products and the total square
  c.check_eq("Sq^2 (h[2,0]*h[2,1]) = 0", sq_n(2, gen(2, 0) * gen(2, 1)), RPoly());
  c.check_eq("Sq^4 h[2,0]^2 = h[1,0]^2", sq_n(4, gen(2, 0).pow(2)), gen(1, 0).pow(2));
  c.check_eq("total square fixes h[2,1]", total_sq(gen(2, 1), 8), gen(2, 1));
  c.check_eq("total square of h[2,0]", total_sq(gen(2, 0), 8), gen(2, 0) + gen(1, 0));

  // coaction agreement
  c.check_eq("coaction route matches Sq^2 on h[2,0]", sq_via_coaction(2, gen(2, 0)), gen(1, 0));
  c.check("coaction is coassociative on h[4,1]", coaction_coassociative(Generator(4, 1)));

  // invariant subspaces
  {
    auto r = invariant_subspace({1, 1});
    c.check("invariants at (1,1) are spanned by h[1,0]",
            r.invariant_dim == 1 && report_contains(r, gen(1, 0)));
  }
  c.check("no invariants at (1,3)", invariant_subspace({1, 3}).invariant_dim == 0);
  {
    auto r = invariant_subspace({4, 24});
    c.check("h[2,1]^4 is invariant at (4,24)",
            r.invariant_dim >= 1 && report_contains(r, gen(2, 1).pow(4)));
  }
  c.check("h[3,0] is not invariant", !is_invariant(gen(3, 0)));
  c.check("h[3,0]*h[3,1] is not invariant", !is_invariant(gen(3, 0) * gen(3, 1)));
  c.check("power families classify as invariant",
          classify_monomial(*Monomial::mul(Monomial::generator(Generator(2, 0), 3),
                                           Monomial::generator(Generator(2, 1), 2))));

  // parsing round trip
  {
    const RPoly p = parse_poly("h[2,0]^2 * h[2,1]^2 + h[2,0] * h[2,1]^3");
    c.check_eq("parser round trip", parse_poly(p.str()), p);
  }

  // limit comparison on a window of bidegrees
  {
    bool all = true;
    std::string bad;
    for (std::int64_t sigma = 0; sigma <= 3 && all; ++sigma)
      for (std::int64_t d = 0; d <= 16; ++d) {
        auto verdict = compare_with_closed_form({sigma, d});
        if (!verdict.iso()) {
          all = false;
          bad = verdict.str();
          break;
        }
      }
    c.check("closed form matches the limit for sigma<=3, d<=16", all, bad);
  }

  return c.results;
}

}  // namespace hts
