#include "invkit/derivation.hpp"

#include <algorithm>

#include "invkit/linalg.hpp"
#include "invkit/polynomial_gcd.hpp"

namespace invkit {

Derivation::Derivation(PRingPtr ring, std::vector<RationalFunction> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->arity())
    fail(ErrorKind::InvalidInput, "derivation needs one image per variable");
  for (const auto& g : images_)
    if (*g.ring() != *ring_->poly_ring())
      fail(ErrorKind::RingMismatch, "derivation image outside the ring");
  // well-defined on the quotient: the chain rule sends every relation into
  // the saturated relation ideal
  for (const auto& r : ring_->relations()) {
    RationalFunction dr = apply(RationalFunction(r));
    if (!ideal_contains(ring_->saturated_relations(), dr.num()))
      fail(ErrorKind::NotWellDefined,
           "derivation does not respect the relation " + r.to_string());
  }
}

Derivation Derivation::zero(const PRingPtr& ring) {
  std::vector<RationalFunction> images(
      ring->arity(), RationalFunction::zero(ring->poly_ring(), ring->order()));
  return Derivation(ring, images);
}

RationalFunction Derivation::apply(const Polynomial& p) const {
  RationalFunction acc =
      RationalFunction::zero(ring_->poly_ring(), ring_->order());
  for (std::size_t v = 0; v < ring_->arity(); ++v) {
    Polynomial dp = p.derivative(v);
    if (dp.is_zero() || images_[v].is_zero()) continue;
    acc = acc + RationalFunction(dp) * images_[v];
  }
  return acc;
}

RationalFunction Derivation::apply(const RationalFunction& g) const {
  if (*g.ring() != *ring_->poly_ring())
    fail(ErrorKind::RingMismatch, "function outside the derivation's ring");
  if (g.is_polynomial()) {
    RationalFunction den_inv =
        RationalFunction::constant(ring_->poly_ring(),
                                   g.den().constant_value().inverse(),
                                   ring_->order());
    return apply(g.num()) * den_inv;
  }
  RationalFunction du = apply(g.num());
  RationalFunction dv = apply(g.den());
  RationalFunction u(g.num()), v(g.den());
  return (du * v - u * dv) / (v * v);
}

bool Derivation::is_ring_stable() const {
  for (const auto& g : images_)
    if (!ring_->unit_in_localization(g.den())) return false;
  return true;
}

bool is_constant(const Derivation& d, const RationalFunction& g) {
  return d.apply(g).is_zero();
}

bool is_d_ideal(const Derivation& d, const Ideal& I) {
  if (*I.ring() != *d.ring()->poly_ring())
    fail(ErrorKind::RingMismatch, "ideal outside the derivation's ring");
  if (!d.is_ring_stable())
    fail(ErrorKind::InvalidInput,
         "derivation does not map the localized ring into itself");
  Ideal sat = d.ring()->chart_ideal(I.generators());
  for (const auto& gen : I.generators()) {
    RationalFunction dg = d.apply(gen);
    // denominator is a unit of the chart, so membership of the numerator
    // in the saturated ideal decides membership of δ(gen)
    if (!ideal_contains(sat, dg.num())) return false;
  }
  return true;
}

LogDerivative log_derivative(const Derivation& d, const RationalFunction& r) {
  if (r.is_zero())
    fail(ErrorKind::InvalidInput, "logarithmic derivative of zero");
  RationalFunction v = d.apply(r) / r;
  return {v, d.ring()->unit_in_localization(v.den())};
}

std::optional<FirstIntegral> first_integral_search(
    const Derivation& d, const std::vector<RationalFunction>& witnesses) {
  if (witnesses.empty()) return std::nullopt;
  const RingPtr& ring = d.ring()->poly_ring();
  if (!ring->field().is_rationals())
    fail(ErrorKind::Unsupported,
         "first-integral search needs rational coefficients");
  std::vector<RationalFunction> logs;
  for (const auto& r : witnesses) {
    if (r.is_zero()) fail(ErrorKind::InvalidInput, "zero witness");
    logs.push_back(d.apply(r) / r);
  }
  // common denominator, numerator coefficient vectors over the monomials
  Polynomial lcm = Polynomial::constant(ring, 1, d.ring()->order());
  for (const auto& v : logs) lcm = poly_lcm(lcm, v.den());
  std::vector<Polynomial> nums;
  for (const auto& v : logs)
    nums.push_back(v.num() * *exact_quotient(lcm, v.den()));

  std::vector<Monomial> monos;
  for (const auto& n : nums)
    for (const auto& t : n.terms())
      if (std::find(monos.begin(), monos.end(), t.mono) == monos.end())
        monos.push_back(t.mono);
  QMatrix a(monos.size(), QRow(nums.size(), mpq_class(0)));
  for (std::size_t j = 0; j < nums.size(); ++j)
    for (const auto& t : nums[j].terms()) {
      std::size_t row =
          std::find(monos.begin(), monos.end(), t.mono) - monos.begin();
      a[row][j] = t.coeff.rat();
    }

  // the map e -> Π r^e is a homomorphism into the multiplicative group, so
  // scanning a kernel basis suffices: if every basis vector lands on a
  // constant, the whole kernel does
  for (const auto& e : primitive_integer_kernel(a, nums.size())) {
    RationalFunction g =
        RationalFunction::constant(ring, Coeff::integer(1), d.ring()->order());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!e[j].fits_slong_p())
        fail(ErrorKind::ResourceLimit, "kernel exponent out of range");
      g = g * witnesses[j].pow(e[j].get_si());
    }
    if (g.is_constant()) continue;
    if (!d.apply(g).is_zero())
      fail(ErrorKind::InvalidInput,
           "internal: kernel candidate failed exact re-verification");
    std::vector<mpz_class> exps(e.begin(), e.end());
    return FirstIntegral{g, exps};
  }
  return std::nullopt;
}

PRingPtr ring_closure_for_derivation(const Derivation& d) {
  const PresentedRing& r = *d.ring();
  std::vector<Polynomial> inverted = r.inverted();
  for (const auto& g : d.images()) {
    const Polynomial& den = g.den();
    if (den.is_constant()) continue;
    Polynomial m = den.monic();
    bool known = false;
    for (const auto& f : inverted)
      if (f.monic() == m) known = true;
    if (!known && !r.unit_in_localization(den)) inverted.push_back(m);
  }
  return make_ring(r.field(), r.poly_ring()->var_names(), r.relations(),
                   inverted, r.asserted_domain());
}

}  // namespace invkit
