#ifndef INVKIT_RATIONAL_FUNCTION_HPP
#define INVKIT_RATIONAL_FUNCTION_HPP

#include "invkit/polynomial.hpp"

namespace invkit {

/// Canonical fraction of polynomials: gcd(num, den) constant, den monic,
/// den != 0; zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero(const RingPtr& ring,
                               MonomialOrder order = MonomialOrder::grevlex());
  static RationalFunction constant(
      const RingPtr& ring, const Coeff& c,
      MonomialOrder order = MonomialOrder::grevlex());
  static RationalFunction variable(
      const RingPtr& ring, std::size_t i,
      MonomialOrder order = MonomialOrder::grevlex());

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  const MonomialOrder& order() const { return num_.order(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Coeff constant_value() const;  // pre: is_constant

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Partial derivative by the quotient rule.
  RationalFunction derivative(std::size_t var) const;

  std::string to_string() const;  // "num" or "(num)/(den)"

 private:
  void canonicalize();
  Polynomial num_, den_;
};

/// Exact composition p(images): realizes ring homomorphisms on elements.
/// images[i] substitutes for variable i; all images share one target ring.
RationalFunction substitute(const Polynomial& p,
                            const std::vector<RationalFunction>& images);
RationalFunction substitute(const RationalFunction& g,
                            const std::vector<RationalFunction>& images);

}  // namespace invkit

#endif
