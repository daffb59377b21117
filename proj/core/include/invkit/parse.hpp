#ifndef INVKIT_PARSE_HPP
#define INVKIT_PARSE_HPP

#include <string_view>

#include "invkit/polynomial.hpp"

namespace invkit {

// Expression grammar (implicit multiplication is rejected; identifiers must
// be declared ring variables):
//
//   expr     = term { ("+" | "-") term } ;
//   term     = signed { "*" signed } ;
//   signed   = [ "-" ] factor ;
//   factor   = atom [ "^" natural ] ;
//   atom     = rational | identifier | "(" expr ")" ;
//   rational = integer [ "/" natural ] ;
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            MonomialOrder order = MonomialOrder::grevlex());

/// Standalone signed rational literal ("-3/2"), used by structured inputs.
mpq_class parse_rational_literal(std::string_view text);

}  // namespace invkit

#endif
