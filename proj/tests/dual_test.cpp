#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

#include "hts/base.hpp"
#include "hts/dual.hpp"

using namespace hts;

namespace {

DualPoly xi(int i, std::uint64_t e = 1) { return DualPoly(XiMonomial::xi(i, e)); }

// one-sided antipode contraction: multiply the left legs of the diagonal by
// the conjugate of the right legs (or vice versa) and sum
DualPoly antipode_contraction(int n, bool conjugate_left) {
  DualPoly sum;
  const auto diag = diagonal_xi(n);
  for (const auto& [a, b] : diag.terms()) {
    const DualPoly left = conjugate_left ? conjugation(DualPoly(a)) : DualPoly(a);
    const DualPoly right = conjugate_left ? DualPoly(b) : conjugation(DualPoly(b));
    sum += left * right;
  }
  return sum;
}

}  // namespace

TEST_CASE("xi monomial basics") {
  CHECK(XiMonomial().is_unit());
  CHECK(XiMonomial().degree() == 0);
  CHECK(XiMonomial::xi(1).degree() == 1);
  CHECK(XiMonomial::xi(2).degree() == 3);
  CHECK(XiMonomial::xi(3).degree() == 7);
  CHECK(XiMonomial::xi(2, 4).degree() == 12);
  CHECK((XiMonomial::xi(1, 2) * XiMonomial::xi(1, 3)) == XiMonomial::xi(1, 5));
  CHECK(XiMonomial::xi(1, 3).frobenius(2) == XiMonomial::xi(1, 12));
  CHECK(XiMonomial::xi(1, 5).xi1_power() == 5);
  CHECK(XiMonomial::xi(2).xi1_power() == std::nullopt);
  CHECK(XiMonomial().xi1_power() == 0);
  CHECK(XiMonomial::xi(2).str() == "xi[2]");
  CHECK(XiMonomial::make({{1, 2}, {2, 1}}).str() == "xi[1]^2*xi[2]");
}

TEST_CASE("dual polynomial arithmetic") {
  CHECK((xi(1) + xi(1)).is_zero());
  CHECK((xi(1) + xi(2)) * xi(1) == xi(1, 2) + xi(2) * xi(1));
  CHECK((xi(1) + xi(2)).pow(2) == xi(1, 2) + xi(2, 2));
  CHECK(xi(1).frobenius(3) == xi(1, 8));
  CHECK((xi(1) + xi(2)).contains(XiMonomial::xi(2)));
  CHECK(!(xi(1) + xi(2)).contains(XiMonomial::xi(3)));
}

TEST_CASE("coproduct of the xi generators") {
  const auto d1 = diagonal_xi(1);
  CHECK(d1 == DualTensor::term(XiMonomial::xi(1), XiMonomial()) +
                  DualTensor::term(XiMonomial(), XiMonomial::xi(1)));

  const auto d3 = diagonal_xi(3);
  CHECK(d3.term_count() == 4);
  CHECK(d3 == DualTensor::term(XiMonomial::xi(3), XiMonomial()) +
                  DualTensor::term(XiMonomial::xi(2, 2), XiMonomial::xi(1)) +
                  DualTensor::term(XiMonomial::xi(1, 4), XiMonomial::xi(2)) +
                  DualTensor::term(XiMonomial(), XiMonomial::xi(3)));
}

TEST_CASE("coproduct is an algebra map") {
  const DualPoly p = xi(1) * xi(2) + xi(3);
  const DualPoly q = xi(1, 3);
  CHECK(diagonal(p * q) == diagonal(p) * diagonal(q));
}

TEST_CASE("coproduct is coassociative on generators") {
  // flatten both associations of the double coproduct and compare
  for (int n = 0; n <= 7; ++n) {
    using Triple = std::tuple<XiMonomial, XiMonomial, XiMonomial>;
    std::vector<Triple> left, right;
    const auto diag = diagonal_xi(n);
    for (const auto& [a, b] : diag.terms()) {
      const auto da = diagonal(DualPoly(a));
      for (const auto& [a1, a2] : da.terms()) left.emplace_back(a1, a2, b);
      const auto db = diagonal(DualPoly(b));
      for (const auto& [b1, b2] : db.terms()) right.emplace_back(a, b1, b2);
    }
    auto normalize = [](std::vector<Triple>& v) {
      std::sort(v.begin(), v.end());
      // cancel duplicate pairs mod 2
      std::vector<Triple> out;
      for (const auto& t : v) {
        if (!out.empty() && out.back() == t)
          out.pop_back();
        else
          out.push_back(t);
      }
      v = std::move(out);
    };
    normalize(left);
    normalize(right);
    CHECK(left == right);
  }
}

TEST_CASE("conjugation of the first few xi") {
  CHECK(conjugate_xi(0) == DualPoly(XiMonomial()));
  CHECK(conjugate_xi(1) == xi(1));
  CHECK(conjugate_xi(2) == xi(2) + xi(1, 3));
  CHECK(conjugate_xi(3) == xi(3) + xi(1) * xi(2, 2) + xi(1, 4) * xi(2) + xi(1, 7));
}

TEST_CASE("antipode axiom on both sides") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(antipode_contraction(n, true).is_zero());
    CHECK(antipode_contraction(n, false).is_zero());
  }
}

TEST_CASE("conjugation is an involution") {
  CHECK(conjugation(conjugate_xi(0)) == DualPoly(XiMonomial()));
  for (int n = 1; n <= 8; ++n) CHECK(conjugation(conjugate_xi(n)) == xi(n));
}

TEST_CASE("conjugate xi always contains the pure xi1 power") {
  for (int n = 1; n <= 10; ++n) {
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    CHECK(conjugate_xi(n).contains(XiMonomial::xi(1, top)));
    CHECK(milnor_coefficient(conjugate_xi(n), top) == 1);
  }
}

TEST_CASE("milnor coefficient reads off pure xi1 powers") {
  const DualPoly p = xi(1, 5) + xi(2) + xi(1) * xi(2);
  CHECK(milnor_coefficient(p, 5) == 1);
  CHECK(milnor_coefficient(p, 1) == 0);
  CHECK(milnor_coefficient(DualPoly(XiMonomial()), 0) == 1);
}

TEST_CASE("tensor arithmetic") {
  const auto t = DualTensor::term(XiMonomial::xi(1), XiMonomial::xi(2));
  CHECK((t + t).is_zero());
  CHECK(t.pow(2) == DualTensor::term(XiMonomial::xi(1, 2), XiMonomial::xi(2, 2)));
  CHECK(t.str() == "xi[1] (x) xi[2]");
}
