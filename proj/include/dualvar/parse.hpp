#ifndef DUALVAR_PARSE_HPP
#define DUALVAR_PARSE_HPP

#include <cstddef>

#include "dualvar/polynomial.hpp"

namespace dualvar {

class parse_error : public error {
 public:
  parse_error(std::size_t pos, const std::string& msg)
      : error("parse error at position " + std::to_string(pos) + ": " + msg),
        pos(pos) {}
  std::size_t pos;
};

/// Parses the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := ident | int | '(' expr ')'
/// Whitespace is insignificant, identifiers must be declared ring variables,
/// integer literals are arbitrary precision (reduced mod p over F_p).
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace dualvar

#endif
