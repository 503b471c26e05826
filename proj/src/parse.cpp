#include "dualvar/parse.hpp"

#include <cctype>

namespace dualvar {

namespace {

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring)
      : s_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      Polynomial t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent");
      unsigned long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long>(get() - '0');
        if (e > 0xFFFF) {
          pos_ = at;
          fail("exponent overflow");
        }
      }
      b = b.pow(static_cast<std::uint32_t>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit;
      while (std::isdigit(static_cast<unsigned char>(peek()))) lit += get();
      return Polynomial::constant(ring_,
                                  Scalar::from_mpz(ring_->field, mpz_class(lit)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string id;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        id += get();
      int i = ring_->var_index(id);
      if (i < 0) {
        pos_ = at;
        fail("unknown variable '" + id + "'");
      }
      return Polynomial::variable(ring_, i);
    }
    fail("expected identifier, integer, or '('");
    return {};  // unreachable
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(pos_, msg);
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace dualvar
