#include "invkit/presented_ring.hpp"

#include "invkit/polynomial_gcd.hpp"

namespace invkit {

PresentedRing::PresentedRing(CoeffField field, std::vector<std::string> vars,
                             std::vector<Polynomial> relations,
                             std::vector<Polynomial> inverted,
                             bool asserted_domain)
    : ring_(make_poly_ring(field, std::move(vars))),
      asserted_domain_(asserted_domain) {
  for (auto& r : relations) {
    if (*r.ring() != *ring_)
      fail(ErrorKind::RingMismatch, "relation outside the ambient ring");
    if (r.is_zero()) continue;
    relations_.push_back(r.with_order(order()));
  }
  for (auto& f : inverted) {
    if (*f.ring() != *ring_)
      fail(ErrorKind::RingMismatch, "inverted element outside the ring");
    inverted_.push_back(f.with_order(order()));
  }
  if (!relations_.empty() &&
      is_unit_ideal(Ideal(ring_, relations_)))
    fail(ErrorKind::InvalidInput, "relation ideal is the unit ideal");
  for (const auto& f : inverted_) {
    if (f.is_zero())
      fail(ErrorKind::InvalidInput, "inverted element is zero");
    if (!relations_.empty() &&
        ideal_contains(Ideal(ring_, relations_), f))
      fail(ErrorKind::InvalidInput,
           "inverted element vanishes modulo the relations");
  }
}

void PresentedRing::require_ufd(const char* what) const {
  if (!ufd_chart())
    fail(ErrorKind::InvalidInput,
         std::string(what) + " requires a chart with zero relation ideal");
}

const Ideal& PresentedRing::relation_ideal() const {
  return relation_ideal_.get(
      [&] { return Ideal(ring_, relations_); });
}

const Ideal& PresentedRing::saturated_relations() const {
  return saturated_relations_.get([&] {
    Ideal I(ring_, relations_);
    Polynomial prod = inverted_product();
    if (prod.is_constant() || relations_.empty()) return I;
    return saturation(I, prod);
  });
}

Polynomial PresentedRing::inverted_product() const {
  Polynomial prod = Polynomial::constant(ring_, 1, order());
  for (const auto& f : inverted_) prod = prod * f;
  return prod;
}

Ideal PresentedRing::chart_ideal(std::vector<Polynomial> extra) const {
  std::vector<Polynomial> gens = relations_;
  for (auto& p : extra) {
    if (*p.ring() != *ring_)
      fail(ErrorKind::RingMismatch, "generator outside the ambient ring");
    gens.push_back(p.with_order(order()));
  }
  Ideal I(ring_, gens);
  Polynomial prod = inverted_product();
  if (prod.is_constant()) return I;
  return saturation(I, prod);
}

bool PresentedRing::unit_in_localization(const Polynomial& d) const {
  if (d.is_zero()) return false;
  if (d.is_constant()) return true;
  Polynomial prod = inverted_product();
  if (prod.is_constant()) return false;
  Polynomial r = d;
  while (!r.is_constant()) {
    Polynomial g = poly_gcd(r, prod);
    if (g.is_constant()) return false;
    r = *exact_quotient(r, g);
  }
  return true;
}

bool PresentedRing::empty_on_chart(const Polynomial& q) const {
  return is_unit_ideal(chart_ideal({q}));
}

bool PresentedRing::contains_mod_relations(const Ideal& saturated,
                                           const Polynomial& p) const {
  return ideal_contains(saturated, p.with_order(order()));
}

RationalFunction PresentedRing::parse_rf(std::string_view num,
                                         std::string_view den) const {
  return RationalFunction(parse(num), parse(den));
}

bool PresentedRing::same_chart(const PresentedRing& o) const {
  if (*ring_ != *o.ring_) return false;
  if (relations_.size() != o.relations_.size() ||
      inverted_.size() != o.inverted_.size())
    return false;
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i] != o.relations_[i]) return false;
  for (std::size_t i = 0; i < inverted_.size(); ++i)
    if (inverted_[i] != o.inverted_[i]) return false;
  return true;
}

PRingPtr make_ring(CoeffField field, std::vector<std::string> vars,
                   std::vector<Polynomial> relations,
                   std::vector<Polynomial> inverted, bool asserted_domain) {
  return std::make_shared<const PresentedRing>(
      field, std::move(vars), std::move(relations), std::move(inverted),
      asserted_domain);
}

PRingPtr make_ring_parsed(CoeffField field, std::vector<std::string> vars,
                          const std::vector<std::string>& relations,
                          const std::vector<std::string>& inverted,
                          bool asserted_domain) {
  RingPtr plain = make_poly_ring(field, vars);
  std::vector<Polynomial> rel, inv;
  for (const auto& s : relations) rel.push_back(parse_polynomial(s, plain));
  for (const auto& s : inverted) inv.push_back(parse_polynomial(s, plain));
  return make_ring(field, vars, std::move(rel), std::move(inv),
                   asserted_domain);
}

}  // namespace invkit
