#ifndef INVKIT_POLYNOMIAL_GCD_HPP
#define INVKIT_POLYNOMIAL_GCD_HPP

#include <optional>

#include "invkit/polynomial.hpp"

namespace invkit {

/// Quotient a/b when the division is exact, nullopt otherwise.
std::optional<Polynomial> exact_quotient(const Polynomial& a,
                                         const Polynomial& b);
bool divides_exactly(const Polynomial& b, const Polynomial& a);

/// Monic multivariate gcd (primitive remainder sequences on a recursive
/// univariate view). gcd(a, 0) = monic a; gcd of nonzero constants is 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors, monic. Over a prime field
/// this raises Inseparable when some factor multiplicity is divisible by p
/// (detected when the gcd/quotient chain stalls).
Polynomial squarefree_part(const Polynomial& a);

/// Monic generator of the radical of (a). Unlike squarefree_part this also
/// handles p-th-power collapse over prime fields (perfect base field), so it
/// never raises for F_p input.
Polynomial radical_part(const Polynomial& a);

/// Exact multiplicity of the factor f in a (largest e with f^e | a).
std::uint32_t factor_multiplicity(const Polynomial& a, const Polynomial& f);

}  // namespace invkit

#endif
