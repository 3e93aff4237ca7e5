#ifndef NMT_PARSE_HPP
#define NMT_PARSE_HPP

#include <string_view>

#include "nmt/formula.hpp"
#include "nmt/signature.hpp"

namespace nmt {

// Grammar (whitespace insignificant):
//   formula := VAR | NAME | NAME "(" formula ("," formula)* ")"
//   VAR     := "p" [1-9][0-9]*
//   NAME    := [A-Za-z_][A-Za-z0-9_^]*   (not matching VAR)
//
// Throws ParseError with a distinct kind for syntax errors (with position),
// unknown connectives and arity mismatches.
Formula parse_formula(std::string_view text, const Signature& sig);

// Structural parse without a signature: names are accepted with the arity
// they are used at.  Needed to read rule files before a matrix fixes the
// signature; validation happens at the point of use.
Formula parse_term(std::string_view text);

}  // namespace nmt

#endif  // NMT_PARSE_HPP
