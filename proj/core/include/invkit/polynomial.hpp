#ifndef INVKIT_POLYNOMIAL_HPP
#define INVKIT_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invkit/coeff.hpp"
#include "invkit/monomial.hpp"

namespace invkit {

/// Plain multivariate polynomial ring: a coefficient field and named
/// variables. Rings compare by content, not identity.
class PolyRing {
 public:
  PolyRing(CoeffField field, std::vector<std::string> vars);

  std::size_t arity() const { return vars_.size(); }
  const CoeffField& field() const { return field_; }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> var_index(std::string_view name) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  CoeffField field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(CoeffField field, std::vector<std::string> vars);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Canonical-form polynomial: no zero coefficients, terms strictly
/// descending in the declared monomial order. Two polynomials over the same
/// ring and order are equal iff their term lists are identical.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ring,
                         MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(RingPtr ring, Coeff c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(RingPtr ring, long c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(RingPtr ring, std::size_t i,
                             MonomialOrder order = MonomialOrder::grevlex());
  /// Sorts, merges duplicate monomials, drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order,
                               std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value as a constant; zero polynomial yields the field zero.
  Coeff constant_value() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(std::size_t var) const;
  bool uses_var(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_term(const Term& t) const;
  Polynomial pow(std::uint64_t e) const;

  /// Unit-scaled so the leading coefficient is 1.
  Polynomial monic() const;

  Polynomial with_order(MonomialOrder order) const;
  Polynomial derivative(std::size_t var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text form; parse(to_string()) reproduces the polynomial
  /// bit-exactly.
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, MonomialOrder order)
      : ring_(std::move(ring)), order_(order) {}

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless both operands share ring contents and order.
void check_compatible(const Polynomial& a, const Polynomial& b);

/// Maps a polynomial into `big` sending variable i to variable var_map[i].
Polynomial map_vars(const Polynomial& p, const RingPtr& big,
                    const std::vector<std::size_t>& var_map,
                    MonomialOrder order);

/// Inverse of map_vars: keeps only the variables listed in `taken` (indices
/// into p's ring, in target order). Fails if p uses any other variable.
Polynomial project_vars(const Polynomial& p, const RingPtr& small,
                        const std::vector<std::size_t>& taken,
                        MonomialOrder order);

}  // namespace invkit

#endif
