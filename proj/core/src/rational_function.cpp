#include "invkit/rational_function.hpp"

#include "invkit/polynomial_gcd.hpp"

namespace invkit {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)),
      den_(Polynomial::constant(num_.ring(), Coeff::one(num_.ring()->field()),
                                num_.order())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_compatible(num_, den_);
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) fail(ErrorKind::InvalidInput, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), Coeff::one(num_.ring()->field()),
                                num_.order());
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
  }
  Coeff lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Coeff inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::zero(const RingPtr& ring,
                                        MonomialOrder order) {
  return RationalFunction(Polynomial::zero(ring, order));
}

RationalFunction RationalFunction::constant(const RingPtr& ring,
                                            const Coeff& c,
                                            MonomialOrder order) {
  return RationalFunction(Polynomial::constant(ring, c, order));
}

RationalFunction RationalFunction::variable(const RingPtr& ring, std::size_t i,
                                            MonomialOrder order) {
  return RationalFunction(Polynomial::variable(ring, i, order));
}

Coeff RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0)
    return constant(ring(), Coeff::one(ring()->field()), order());
  RationalFunction base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  return RationalFunction(base.num_.pow(n), base.den_.pow(n));
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  return RationalFunction(
      num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one())
    return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction substitute(const Polynomial& p,
                            const std::vector<RationalFunction>& images) {
  if (images.size() != p.ring()->arity())
    fail(ErrorKind::RingMismatch,
         "image count does not match the variable count");
  if (images.empty())
    fail(ErrorKind::RingMismatch, "substitution needs at least one image");
  const RingPtr& target = images[0].ring();
  MonomialOrder order = images[0].order();
  for (const auto& g : images)
    if (*g.ring() != *target || g.order() != order)
      fail(ErrorKind::RingMismatch, "images live in different rings");
  if (target->field() != p.ring()->field())
    fail(ErrorKind::RingMismatch, "substitution across coefficient fields");

  RationalFunction acc = RationalFunction::zero(target, order);
  for (const auto& t : p.terms()) {
    RationalFunction m =
        RationalFunction::constant(target, t.coeff, order);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      m = m * images[i].pow(static_cast<long>(e));
    }
    acc = acc + m;
  }
  return acc;
}

RationalFunction substitute(const RationalFunction& g,
                            const std::vector<RationalFunction>& images) {
  RationalFunction n = substitute(g.num(), images);
  RationalFunction d = substitute(g.den(), images);
  if (d.is_zero())
    fail(ErrorKind::InvalidInput,
         "denominator vanishes identically under substitution");
  return n / d;
}

}  // namespace invkit
