#ifndef MGDIAG_CLI_POLY_PARSER_HPP
#define MGDIAG_CLI_POLY_PARSER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "mgdiag/exactalg/polynomial.hpp"

namespace mgdiag::cli {

struct PolyExpr {
  std::string source;
  exactalg::MultiPoly poly;
  int m;
  int n;
  std::uint32_t p;
};

/// Parses text over F_p in variables x1..xm, y1..yn. Grammar (see
/// docs/grammar.md):
///
///   expr   = [ "+" | "-" ] term { ( "+" | "-" ) term }
///   term   = factor { "*" factor }
///   factor = atom [ "^" integer ]
///   atom   = integer | variable | "(" expr ")"
///
/// Whitespace is ignored. Throws ParseError with the byte offset of the
/// offending token.
PolyExpr parse_polynomial(std::string_view text, int m, int n, std::uint32_t p);

}  // namespace mgdiag::cli

#endif  // MGDIAG_CLI_POLY_PARSER_HPP
