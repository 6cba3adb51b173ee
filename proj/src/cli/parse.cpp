#include "hrl/cli/parse.hpp"

#include <cctype>

#include "hrl/error.hpp"

namespace hrl::cli {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  RatPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    RatPoly p = expr();
    if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  void advance() {
    ++pos_;
    skip_space();
  }

  RatPoly expr() {
    RatPoly acc = term();
    while (peek() == '+' || peek() == '-') {
      const bool minus = peek() == '-';
      advance();
      RatPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  RatPoly term() {
    RatPoly acc = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        advance();
        acc = acc * factor();
      } else if (c == 'x' || c == '(') {
        acc = acc * factor();
      } else if (c == '/') {
        throw ParseError("division is only allowed inside a rational literal a/b", pos_);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("number after a factor needs an explicit '*'", pos_);
      } else {
        return acc;
      }
    }
  }

  RatPoly factor() {
    if (peek() == '-') {
      advance();
      return RatPoly{} - factor();
    }
    if (peek() == '+') {
      advance();
      return factor();
    }
    RatPoly base = primary();
    if (peek() == '^') {
      advance();
      const std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("exponent must be a nonnegative integer", at);
      }
      const std::string digits = read_digits();
      if (digits.size() > 9 || std::stoul(digits) > kMaxExponent) {
        throw ParseError("exponent too large (limit " + std::to_string(kMaxExponent) + ")", at);
      }
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  RatPoly primary() {
    const char c = peek();
    if (c == 'x') {
      advance();
      return RatPoly::x();
    }
    if (c == '(') {
      const std::size_t open = pos_;
      advance();
      if (peek() == ')') throw ParseError("empty parentheses", pos_);
      RatPoly inner = expr();
      if (peek() != ')') throw ParseError("missing ')' for '(' at position " + std::to_string(open), pos_);
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(read_digits());
      if (peek() == '/') {
        const std::size_t slash = pos_;
        advance();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("division is only allowed inside a rational literal a/b", slash);
        }
        const std::size_t at = pos_;
        Integer den(read_digits());
        if (den == 0) throw ParseError("zero denominator", at);
        value /= Rational(den);
      }
      return RatPoly::constant(value);
    }
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  // Digits must be contiguous; whitespace ends the literal.
  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string digits = src_.substr(start, pos_ - start);
    skip_space();
    return digits;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(const std::string& src) { return Parser(src).parse(); }

std::vector<RatPoly> parse_poly_list(const std::string& src) {
  std::vector<RatPoly> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = src.find(';', start);
    const std::string part = src.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    try {
      out.push_back(parse_poly(part));
    } catch (const ParseError& e) {
      throw ParseError("in term " + std::to_string(out.size() + 1) + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       start + e.position());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace hrl::cli
