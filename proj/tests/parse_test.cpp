#include <doctest.h>

#include "hts/base.hpp"
#include "hts/parse.hpp"
#include "hts/ring.hpp"

using namespace hts;

namespace {

RPoly gen(int t, int s) { return RPoly(Monomial::generator(Generator(t, s))); }

}  // namespace

TEST_CASE("atoms") {
  CHECK(parse_poly("0") == RPoly());
  CHECK(parse_poly("1") == RPoly(Monomial()));
  CHECK(parse_poly("h[1,0]") == gen(1, 0));
  CHECK(parse_poly("h[10,3]") == gen(10, 3));
}

TEST_CASE("terms and sums") {
  CHECK(parse_poly("h[2,0]*h[2,1]") == gen(2, 0) * gen(2, 1));
  CHECK(parse_poly("h[2,0]^3") == gen(2, 0).pow(3));
  CHECK(parse_poly("h[1,0] + h[2,0]") == gen(1, 0) + gen(2, 0));
  CHECK(parse_poly("h[1,0] + h[1,0]") == RPoly());
  CHECK(parse_poly("h[2,1]*h[1,0]") == RPoly());  // inadmissible product
  CHECK(parse_poly("h[2,0]^0") == RPoly(Monomial()));
  CHECK(parse_poly("0^0") == RPoly(Monomial()));
  CHECK(parse_poly("1*h[3,1]^2*1") == gen(3, 1).pow(2));
  CHECK(parse_poly("0*h[3,1]") == RPoly());
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_poly("  h[ 2 , 0 ] ^ 2 * h[2,1] ") == gen(2, 0).pow(2) * gen(2, 1));
  CHECK(parse_poly("h[1,0]+h[2,0]") == parse_poly("h[1,0] + h[2,0]"));
}

TEST_CASE("round trip through str") {
  const std::vector<std::string> inputs = {
      "h[2,0]^2*h[3,0] + h[1,0]^3",
      "h[2,1]^4",
      "1",
      "0",
      "h[1,0] + 1",
  };
  for (const auto& in : inputs) {
    const RPoly p = parse_poly(in);
    CHECK(parse_poly(p.str()) == p);
  }
}

TEST_CASE("syntax errors carry positions") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::Syntax);
      return e.position();
    }
    FAIL("expected a syntax error for: " << text);
    return SIZE_MAX;
  };

  CHECK(position_of("") == 0);
  CHECK(position_of("h") == 1);
  CHECK(position_of("h[1,0") == 5);
  CHECK(position_of("h[1,0] + ") == 9);
  CHECK(position_of("h[1,0] h[2,0]") == 7);
  CHECK(position_of("x[1,0]") == 0);
  CHECK(position_of("h[a,0]") == 2);
  CHECK(position_of("h[1,0]^") == 7);
}

TEST_CASE("semantic errors") {
  try {
    parse_poly("h[1,1]");
    FAIL("expected a semantic error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Semantic);
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly("h[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_poly("h[2,5]"), ParseError);
  CHECK_THROWS_AS(parse_poly("h[99,0]"), ParseError);
}

TEST_CASE("exponent overflow") {
  CHECK_THROWS_AS(parse_poly("h[1,0]^99999999999999999999"), OverflowError);
  CHECK_THROWS_AS(parse_poly("h[2,0]^5000000000"), OverflowError);
}

TEST_CASE("ast shape") {
  const auto expr = parse_element("h[2,0]^2*h[2,1] + 1");
  REQUIRE(expr.terms.size() == 2);
  REQUIRE(expr.terms[0].factors.size() == 2);
  CHECK(expr.terms[0].factors[0].atom.kind == ExprAtom::Kind::Generator);
  CHECK(expr.terms[0].factors[0].atom.t == 2);
  CHECK(expr.terms[0].factors[0].power == 2);
  CHECK(expr.terms[0].factors[1].power == 1);
  CHECK(expr.terms[1].factors[0].atom.kind == ExprAtom::Kind::One);
}
