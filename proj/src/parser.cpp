#include "asymvar/parser.hpp"

#include <cctype>

namespace asymvar {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::string& x, const std::string& y) : s_(text), x_(x), y_(y) {}

  BiPoly parse() {
    BiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      const std::size_t caret = pos_++;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') throw NegativeExponent("negative exponent at position " + std::to_string(caret));
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw SyntaxError("expected an integer exponent", pos_);
      Integer e(digits());
      if (e > 10000) throw SyntaxError("exponent too large", caret);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  BiPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q{Integer(digits())};
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw SyntaxError("expected a denominator", pos_);
        const std::size_t at = pos_;
        Integer d(digits());
        if (d == 0) throw SyntaxError("zero denominator", at);
        q /= Rational(d);
      }
      check_no_implicit_product();
      return BiPoly(TowerElement(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == x_) return BiPoly::x();
      if (name == y_) return BiPoly::y();
      throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  void check_no_implicit_product() {
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
      throw SyntaxError("implicit multiplication is not allowed", pos_);
  }

  std::string_view s_;
  std::string x_, y_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_polynomial(std::string_view text, const std::string& x, const std::string& y) {
  return Parser(text, x, y).parse();
}

}  // namespace asymvar
