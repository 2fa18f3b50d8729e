#include "hts/parse.hpp"

#include <cctype>
#include <limits>

#include "hts/base.hpp"

namespace hts {
namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
  }

  std::uint64_t uint_literal(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw OverflowError("integer literal too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ExprAtom parse_atom(Scanner& sc) {
  const char c = sc.peek();
  if (c == '1') {
    sc.accept('1');
    return {ExprAtom::Kind::One, 0, 0};
  }
  if (c == '0') {
    sc.accept('0');
    return {ExprAtom::Kind::Zero, 0, 0};
  }
  if (c == 'h') {
    sc.accept('h');
    sc.expect('[', "after 'h'");
    const std::size_t t_pos = sc.pos();
    const std::uint64_t t = sc.uint_literal("generator index t");
    sc.expect(',', "between generator indices");
    const std::size_t s_pos = sc.pos();
    const std::uint64_t s = sc.uint_literal("generator index s");
    sc.expect(']', "after generator indices");
    if (t > 62)
      throw ParseError(ParseError::Kind::Semantic, t_pos, "generator index t out of range");
    if (s >= t)
      throw ParseError(ParseError::Kind::Semantic, s_pos,
                       "generator h[t,s] requires s < t");
    return {ExprAtom::Kind::Generator, static_cast<int>(t), static_cast<int>(s)};
  }
  sc.fail("expected 'h[t,s]', '1', or '0'");
}

ExprFactor parse_factor(Scanner& sc) {
  ExprFactor f;
  f.atom = parse_atom(sc);
  if (sc.accept('^')) f.power = sc.uint_literal("exponent");
  return f;
}

ExprTerm parse_term(Scanner& sc) {
  ExprTerm term;
  term.factors.push_back(parse_factor(sc));
  while (sc.accept('*')) term.factors.push_back(parse_factor(sc));
  return term;
}

}  // namespace

ElementExpr parse_element(std::string_view input) {
  Scanner sc(input);
  ElementExpr expr;
  if (sc.done()) sc.fail("empty input");
  expr.terms.push_back(parse_term(sc));
  while (sc.accept('+')) expr.terms.push_back(parse_term(sc));
  if (!sc.done()) sc.fail("unexpected trailing input");
  return expr;
}

RPoly eval(const ElementExpr& expr) {
  RPoly sum;
  for (const ExprTerm& term : expr.terms) {
    RPoly prod(Monomial{});
    for (const ExprFactor& f : term.factors) {
      RPoly base;
      switch (f.atom.kind) {
        case ExprAtom::Kind::One:
          base = RPoly(Monomial{});
          break;
        case ExprAtom::Kind::Zero:
          base = RPoly();
          break;
        case ExprAtom::Kind::Generator:
          base = RPoly(Monomial::generator(Generator(f.atom.t, f.atom.s)));
          break;
      }
      prod = prod * base.pow(f.power);
    }
    sum += prod;
  }
  return sum;
}

RPoly parse_poly(std::string_view input) { return eval(parse_element(input)); }

}  // namespace hts
