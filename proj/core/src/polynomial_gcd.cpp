#include "invkit/polynomial_gcd.hpp"

#include <algorithm>

namespace invkit {

namespace {

const MonomialOrder kDiv = MonomialOrder::grevlex();

// Univariate view of p in variable v: coefficients by v-degree, each free
// of v. Index = degree in v.
std::vector<Polynomial> coeffs_in_var(const Polynomial& p, std::size_t v) {
  std::uint32_t d = p.degree_in(v);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : p.terms()) {
    auto exps = t.mono.exponents();
    std::uint32_t e = exps[v];
    exps[v] = 0;
    buckets[e].push_back({Monomial(std::move(exps)), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (auto& b : buckets)
    out.push_back(Polynomial::from_terms(p.ring(), p.order(), std::move(b)));
  return out;
}

std::optional<std::size_t> min_var(const Polynomial& p) {
  for (std::size_t i = 0; i < p.ring()->arity(); ++i)
    if (p.uses_var(i)) return i;
  return std::nullopt;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// gcd of the univariate-view coefficients of p w.r.t. v
Polynomial content_in_var(const Polynomial& p, std::size_t v) {
  Polynomial g = Polynomial::zero(p.ring(), p.order());
  for (const auto& c : coeffs_in_var(p, v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial must_divide(const Polynomial& a, const Polynomial& b) {
  auto q = exact_quotient(a, b);
  if (!q) fail(ErrorKind::InvalidInput, "internal: inexact division");
  return *q;
}

// pseudo remainder of a by b in the univariate view at v; deg_v(b) >= 1
Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t v) {
  std::uint32_t db = b.degree_in(v);
  auto bc = coeffs_in_var(b, v);
  const Polynomial& lb = bc[db];
  Polynomial r = a;
  std::int64_t e = static_cast<std::int64_t>(a.degree_in(v)) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    std::uint32_t dr = r.degree_in(v);
    auto rc = coeffs_in_var(r, v);
    Term shift{Monomial::var(r.ring()->arity(), v, dr - db),
               Coeff::one(r.ring()->field())};
    r = r * lb - b.times_term(shift) * rc[dr];
    --e;
  }
  for (; e > 0; --e) r = r * lb;
  return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.ring(), Coeff::one(a.ring()->field()),
                                a.order());
  std::size_t v = std::min(*min_var(a), *min_var(b));
  std::uint32_t da = a.degree_in(v), db = b.degree_in(v);
  if (da == 0) return gcd_rec(a, content_in_var(b, v));
  if (db == 0) return gcd_rec(content_in_var(a, v), b);

  Polynomial ca = content_in_var(a, v), cb = content_in_var(b, v);
  Polynomial c = gcd_rec(ca, cb);
  Polynomial A = must_divide(a, ca), B = must_divide(b, cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (true) {
    Polynomial R = prem(A, B, v);
    if (R.is_zero()) break;
    if (R.degree_in(v) == 0) {
      // primitive parts coprime in v
      return c.monic();
    }
    R = must_divide(R, content_in_var(R, v));
    A = std::move(B);
    B = std::move(R);
  }
  return (c * B).monic();
}

// p-th root over F_p: every exponent divisible by p, coefficients fixed by
// Frobenius on the prime field
std::optional<Polynomial> pth_root(const Polynomial& a) {
  std::uint32_t p = a.ring()->field().characteristic();
  std::vector<Term> out;
  out.reserve(a.term_count());
  for (const auto& t : a.terms()) {
    auto exps = t.mono.exponents();
    for (auto& e : exps) {
      if (e % p != 0) return std::nullopt;
      e /= p;
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(a.ring(), a.order(), std::move(out));
}

Polynomial gcd_with_partials(const Polynomial& a, bool* all_zero) {
  Polynomial g = a;
  bool zero = true;
  for (std::size_t v = 0; v < a.ring()->arity(); ++v) {
    Polynomial d = a.derivative(v);
    if (d.is_zero()) continue;
    zero = false;
    g = gcd_rec(g, d);
  }
  if (all_zero) *all_zero = zero;
  return zero ? a : g;
}

}  // namespace

std::optional<Polynomial> exact_quotient(const Polynomial& a,
                                         const Polynomial& b) {
  check_compatible(a, b);
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  Polynomial r = a;
  std::vector<Term> qterms;
  const Term& lb = b.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Term t{lr.mono / lb.mono, lr.coeff / lb.coeff};
    qterms.push_back(t);
    r = r - b.times_term(t);
  }
  return Polynomial::from_terms(a.ring(), a.order(), std::move(qterms));
}

bool divides_exactly(const Polynomial& b, const Polynomial& a) {
  return exact_quotient(a, b).has_value();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  return gcd_rec(a, b);
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring(), a.order());
  Polynomial g = poly_gcd(a, b);
  return (*exact_quotient(a, g) * b).monic();
}

Polynomial squarefree_part(const Polynomial& a) {
  if (a.is_zero()) fail(ErrorKind::InvalidInput, "squarefree part of zero");
  const RingPtr& ring = a.ring();
  if (a.is_constant())
    return Polynomial::constant(ring, Coeff::one(ring->field()), a.order());
  bool all_zero = false;
  Polynomial g = gcd_with_partials(a, &all_zero);
  if (ring->field().is_prime_field() && all_zero)
    fail(ErrorKind::Inseparable,
         "all partial derivatives vanish (p-th power in characteristic p)");
  if (g.is_constant()) return a.monic();
  Polynomial sf = *exact_quotient(a, g);
  if (ring->field().is_prime_field()) {
    // every factor of a must reappear in sf, else some multiplicity was
    // divisible by p and the quotient chain stalled
    Polynomial r = a;
    while (true) {
      Polynomial d = poly_gcd(r, sf);
      if (d.is_constant()) break;
      r = *exact_quotient(r, d);
    }
    if (!r.is_constant())
      fail(ErrorKind::Inseparable,
           "factor multiplicity divisible by p (quotient chain stalls)");
  }
  return sf.monic();
}

Polynomial radical_part(const Polynomial& a) {
  if (a.is_zero()) fail(ErrorKind::InvalidInput, "radical part of zero");
  const RingPtr& ring = a.ring();
  if (a.is_constant())
    return Polynomial::constant(ring, Coeff::one(ring->field()), a.order());
  bool all_zero = false;
  Polynomial g = gcd_with_partials(a, &all_zero);
  if (all_zero) {
    auto root = pth_root(a);
    if (!root)
      fail(ErrorKind::Inseparable, "internal: vanished partials without root");
    return radical_part(*root);
  }
  if (g.is_constant()) return a.monic();
  Polynomial sf = *exact_quotient(a, g);
  if (ring->field().is_rationals()) return sf.monic();
  Polynomial r = radical_part(g);
  Polynomial dup = poly_gcd(r, sf);
  return (sf * *exact_quotient(r, dup)).monic();
}

std::uint32_t factor_multiplicity(const Polynomial& a, const Polynomial& f) {
  if (f.is_constant()) fail(ErrorKind::InvalidInput, "constant factor");
  std::uint32_t n = 0;
  Polynomial r = a;
  while (true) {
    auto q = exact_quotient(r, f);
    if (!q) return n;
    r = *q;
    ++n;
  }
}

}  // namespace invkit
