#include "invkit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace invkit {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct MonoDescCmp {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, order) > 0;
  }
};

}  // namespace

PolyRing::PolyRing(CoeffField field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!valid_identifier(vars_[i]))
      fail(ErrorKind::InvalidInput, "invalid variable name '" + vars_[i] + "'");
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        fail(ErrorKind::InvalidInput,
             "duplicate variable name '" + vars_[i] + "'");
  }
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_poly_ring(CoeffField field, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(field, std::move(vars));
}

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (*a.ring() != *b.ring())
    fail(ErrorKind::RingMismatch, "polynomials live in different rings");
  if (a.order() != b.order())
    fail(ErrorKind::RingMismatch, "polynomials carry different term orders");
}

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder order) {
  return Polynomial(std::move(ring), order);
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c, MonomialOrder order) {
  if (c.field() != ring->field())
    fail(ErrorKind::RingMismatch, "constant from a different field");
  Polynomial p(std::move(ring), order);
  if (!c.is_zero())
    p.terms_.push_back({Monomial::unit(p.ring_->arity()), std::move(c)});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c, MonomialOrder order) {
  Coeff v = ring->field().is_rationals()
                ? Coeff::integer(c)
                : Coeff::residue(c, ring->field().modulus());
  return constant(std::move(ring), v, order);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i,
                                MonomialOrder order) {
  if (i >= ring->arity()) fail(ErrorKind::InvalidInput, "variable index");
  Polynomial p(ring, order);
  p.terms_.push_back(
      {Monomial::var(ring->arity(), i), Coeff::one(ring->field())});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order,
                                  std::vector<Term> terms) {
  std::map<Monomial, Coeff, MonoDescCmp> acc{MonoDescCmp{order}};
  for (auto& t : terms) {
    if (t.mono.arity() != ring->arity())
      fail(ErrorKind::RingMismatch, "term arity mismatch");
    if (t.coeff.field() != ring->field())
      fail(ErrorKind::RingMismatch, "term coefficient field mismatch");
    auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
    if (!fresh) it->second = it->second + t.coeff;
  }
  Polynomial p(std::move(ring), order);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

Coeff Polynomial::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidInput, "not a constant");
  return terms_.empty() ? Coeff::zero(ring_->field()) : terms_[0].coeff;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::InvalidInput, "zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, order_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(*this, o);
  std::map<Monomial, Coeff, MonoDescCmp> acc{MonoDescCmp{order_}};
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      Coeff c = a.coeff * b.coeff;
      auto [it, fresh] = acc.try_emplace(std::move(m), c);
      if (!fresh) it->second = it->second + c;
    }
  }
  Polynomial r(ring_, order_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (c.is_zero()) return zero(ring_, order_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
  if (t.coeff.is_zero()) return zero(ring_, order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& s : terms_)
    r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial acc = constant(ring_, Coeff::one(ring_->field()), order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(ring_, order, terms_);
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  const CoeffField& f = ring_->field();
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Coeff k = f.is_rationals() ? Coeff::integer(static_cast<long>(e))
                               : Coeff::residue(static_cast<long>(e),
                                                f.modulus());
    Coeff c = t.coeff * k;
    if (c.is_zero()) continue;
    auto exps = t.mono.exponents();
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), c});
  }
  return from_terms(ring_, order_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (*ring_ != *o.ring_ || order_ != o.order_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = false;
    Coeff c = t.coeff;
    if (ring_->field().is_rationals() && c.sgn() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = c.is_one();
    bool unit_mono = t.mono.is_unit();
    if (!unit_coeff || unit_mono) {
      os << c.to_string();
      if (!unit_mono) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->var_name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

Polynomial map_vars(const Polynomial& p, const RingPtr& big,
                    const std::vector<std::size_t>& var_map,
                    MonomialOrder order) {
  if (var_map.size() != p.ring()->arity())
    fail(ErrorKind::InvalidInput, "variable map arity mismatch");
  if (big->field() != p.ring()->field())
    fail(ErrorKind::RingMismatch, "variable map across coefficient fields");
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(big->arity(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= big->arity())
        fail(ErrorKind::InvalidInput, "variable map target out of range");
      exps[var_map[i]] += t.mono[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(big, order, std::move(out));
}

Polynomial project_vars(const Polynomial& p, const RingPtr& small,
                        const std::vector<std::size_t>& taken,
                        MonomialOrder order) {
  if (taken.size() != small->arity())
    fail(ErrorKind::InvalidInput, "projection arity mismatch");
  std::vector<std::optional<std::size_t>> down(p.ring()->arity());
  for (std::size_t j = 0; j < taken.size(); ++j) down[taken[j]] = j;
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(small->arity(), 0);
    for (std::size_t i = 0; i < p.ring()->arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!down[i])
        fail(ErrorKind::InvalidInput,
             "polynomial uses a variable outside the projection");
      exps[*down[i]] += t.mono[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(small, order, std::move(out));
}

}  // namespace invkit
