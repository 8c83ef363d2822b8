#pragma once

// Text literals for field, extension and algebra elements, shared between the
// test fixtures and the command-line tool.
//
// Grammars (whitespace is insignificant between tokens):
//   FqElem     [c0,c1,...,c_{n-1}]          residues, low degree first
//   LocalElem  0                            exact zero
//              O(pi^k)                      fuzzy zero known modulo pi^k
//              pi^v*(d0 + d1*pi + d2*pi^2 + ... + O(pi^N))
//                                           pi is the decimal prime for p-adic
//                                           fields and `t` for Laurent series;
//                                           digits are residues (p-adic) or
//                                           FqElem literals (Laurent)
//              <integer>                    shorthand: image of the integer at
//                                           the field's default precision
//              [d0,d1,...]                  shorthand: digit list at valuation 0
//   ExtElem    (e0, e1, ..., e_{m-1})       base-field literals on the basis
//                                           1, beta, ..., beta^{m-1}
//   AlgElem    [x0; x1; ...; x_{m-1}]       ExtElem literals, coefficient of t^s
//
// Every parser consumes the whole string and reports malformed input as
// SyntaxError with the offending position; literals that are well-formed but
// belong to a different field (wrong uniformizer symbol, residue out of range,
// wrong component count) raise ContextMismatch. Rendering uses the str()
// methods of the element types; parse(x.str()) == x exactly, and
// parse(s).str() is the canonical spelling of s.

#include <string>

#include "naca/extension.hpp"
#include "naca/ffield.hpp"
#include "naca/localfield.hpp"
#include "naca/nacalg.hpp"

namespace naca {

FqElem parse_fq(const FqSpecPtr& spec, const std::string& text);
LocalElem parse_local(const LocalFieldSpecPtr& spec, const std::string& text);

ExtElem<FqElem> parse_ext(const FqExtPtr& ext, const std::string& text);
ExtElem<LocalElem> parse_ext(const LocalExtPtr& ext, const std::string& text);

AlgElem<FqElem> parse_alg(const AlgPtr<FqElem>& alg, const std::string& text);
AlgElem<LocalElem> parse_alg(const AlgPtr<LocalElem>& alg, const std::string& text);

}  // namespace naca
