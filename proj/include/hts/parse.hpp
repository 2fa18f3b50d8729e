#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hts/ring.hpp"

namespace hts {

// Element grammar:
//   expr   := term { "+" term }
//   term   := factor { "*" factor }
//   factor := atom [ "^" uint ]
//   atom   := "h[" uint "," uint "]" | "1" | "0"
// Whitespace is insignificant everywhere.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        kind_(kind),
        position_(position) {}
  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

struct ExprAtom {
  enum class Kind { Generator, One, Zero };
  Kind kind = Kind::One;
  int t = 0;
  int s = 0;
};

struct ExprFactor {
  ExprAtom atom;
  std::uint64_t power = 1;
};

struct ExprTerm {
  std::vector<ExprFactor> factors;
};

struct ElementExpr {
  std::vector<ExprTerm> terms;
};

ElementExpr parse_element(std::string_view input);
RPoly eval(const ElementExpr& expr);
RPoly parse_poly(std::string_view input);

}  // namespace hts
