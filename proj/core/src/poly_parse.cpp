// Recursive-descent parser for the polynomial text grammar:
//
//   expr    := [sign] term { sign term }
//   term    := factor { ['*'] factor }
//   factor  := primary [ '^' uint ]
//   primary := uint [ '/' uint ] | identifier | '(' expr ')'
//
// An identifier that is not a ring variable is split into a product of ring
// variables when possible ("x0x1" -> x0*x1, "xyz" -> x*y*z).

#include "cypair/error.hpp"
#include "cypair/poly.hpp"

#include <cctype>
#include <functional>

namespace cypair {
namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Poly run() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed polynomial at offset " + std::to_string(pos_) +
                     ": " + what + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      if (!starts_factor(peek())) fail("expected a term");
      Poly t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || is_ident_start(c) || c == '(';
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        if (!starts_factor(peek())) fail("expected a factor after '*'");
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("malformed exponent");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_uint() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_uint();
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = read_uint();
        if (den.empty()) fail("malformed rational literal");
        return Poly::constant(ring_, Rat::parse(num + "/" + den));
      }
      pos_ = save;
      return Poly::constant(ring_, Rat::parse(num));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      return identifier(s_.substr(start, pos_ - start));
    }
    fail("expected a number, variable or '('");
  }

  Poly identifier(std::string_view id) {
    if (auto i = ring_.index_of(id)) return Poly::variable(ring_, *i);
    // Split into a product of ring variables, longest match first.
    std::vector<std::size_t> parts;
    std::function<bool(std::size_t)> split = [&](std::size_t at) -> bool {
      if (at == id.size()) return true;
      for (std::size_t len = id.size() - at; len > 0; --len) {
        auto v = ring_.index_of(id.substr(at, len));
        if (!v) continue;
        parts.push_back(*v);
        if (split(at + len)) return true;
        parts.pop_back();
      }
      return false;
    };
    if (!split(0))
      throw ParseError("unknown variable '" + std::string(id) + "'");
    Poly p = Poly::constant(ring_, Rat(1));
    for (auto v : parts) p = p * Poly::variable(ring_, v);
    return p;
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, const Ring& ring) {
  return Parser(text, ring).run();
}

}  // namespace cypair
