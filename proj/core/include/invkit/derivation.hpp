#ifndef INVKIT_DERIVATION_HPP
#define INVKIT_DERIVATION_HPP

#include <gmpxx.h>

#include "invkit/presented_ring.hpp"

namespace invkit {

/// k-linear derivation on a chart, given by its images on the variables and
/// extended to the fraction field by the quotient rule (the extension is
/// unique). Construction verifies well-definedness on the relations via the
/// chain rule.
class Derivation {
 public:
  Derivation(PRingPtr ring, std::vector<RationalFunction> images);

  static Derivation zero(const PRingPtr& ring);

  const PRingPtr& ring() const { return ring_; }
  const std::vector<RationalFunction>& images() const { return images_; }

  /// Chain + quotient rule; coefficients are constants.
  RationalFunction apply(const RationalFunction& g) const;
  RationalFunction apply(const Polynomial& p) const;

  bool is_ring_stable() const;  // every δ(x_i) lies in the localized ring

 private:
  PRingPtr ring_;
  std::vector<RationalFunction> images_;
};

bool is_constant(const Derivation& d, const RationalFunction& g);

/// δ(gen) ∈ I for every generator (sufficient by the Leibniz rule).
/// Pre: δ maps the localized ring into itself.
bool is_d_ideal(const Derivation& d, const Ideal& I);

struct LogDerivative {
  RationalFunction value;  // δ(r)/r, canonical
  bool in_ring;            // denominator support inside the inverted set
};

LogDerivative log_derivative(const Derivation& d, const RationalFunction& r);

struct FirstIntegral {
  RationalFunction g;
  std::vector<mpz_class> exponents;  // over the witnesses, primitive
};

/// Kernel of the logarithmic derivatives: a nonzero integer vector e with
/// Σ e_j δ(r_j)/r_j = 0 yields g = Π r_j^{e_j} with δ(g) = 0. The result is
/// re-verified exactly (δ(g) = 0 and g nonconstant); none is a sound
/// outcome — completeness is not promised at finite witness scale.
std::optional<FirstIntegral> first_integral_search(
    const Derivation& d, const std::vector<RationalFunction>& witnesses);

/// The chart enlarged by inverting the denominators of the images; on the
/// result the derivation is ring-stable.
PRingPtr ring_closure_for_derivation(const Derivation& d);

}  // namespace invkit

#endif
