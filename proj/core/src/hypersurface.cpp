#include "invkit/hypersurface.hpp"

#include <algorithm>

#include "invkit/polynomial_gcd.hpp"

namespace invkit {

namespace {

std::optional<std::size_t> only_var(const Polynomial& p) {
  std::optional<std::size_t> v;
  for (std::size_t i = 0; i < p.ring()->arity(); ++i) {
    if (!p.uses_var(i)) continue;
    if (v) return std::nullopt;
    v = i;
  }
  return v;
}

// ---- exact univariate factorization helpers ----

// dense monic coefficient list of p in variable v (constant coefficients)
std::vector<mpq_class> dense_q_coeffs(const Polynomial& p, std::size_t v) {
  std::vector<mpq_class> c(p.degree_in(v) + 1, mpq_class(0));
  for (const auto& t : p.terms()) c[t.mono[v]] = t.coeff.rat();
  mpq_class lead = c.back();
  for (auto& x : c) x /= lead;
  return c;
}

Polynomial from_dense_q(const std::vector<mpq_class>& c, const RingPtr& ring,
                        std::size_t v, MonomialOrder order) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    terms.push_back({Monomial::var(ring->arity(), v,
                                   static_cast<std::uint32_t>(e)),
                     Coeff::rational(c[e])});
  }
  return Polynomial::from_terms(ring, order, terms);
}

std::optional<mpq_class> mpq_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

mpq_class eval_dense(const std::vector<mpq_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// divisors of |n| via trial division; nullopt when a cofactor above the
// bound survives
std::optional<std::vector<mpz_class>> divisors_of(mpz_class n,
                                                  unsigned long bound) {
  if (n < 0) n = -n;
  if (n == 0) return std::vector<mpz_class>{};
  std::vector<std::pair<mpz_class, unsigned>> fac;
  for (mpz_class d = 2; d * d <= n && d <= bound; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    fac.push_back({d, e});
  }
  if (n > 1) {
    if (n > bound) return std::nullopt;
    fac.push_back({n, 1});
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// rational roots of a monic rational polynomial
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& monic) {
  mpz_class lcm = 1;
  for (const auto& q : monic)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> zc;
  for (const auto& q : monic) zc.push_back(q.get_num() * (lcm / q.get_den()));
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < zc.size() - 1 && zc[low] == 0) ++low;
  if (low > 0) roots.push_back(mpq_class(0));
  auto a0divs = divisors_of(zc[low], 1000000);
  auto andivs = divisors_of(zc.back(), 1000000);
  if (!a0divs || !andivs) return roots;  // beyond the trial bound; sound
  for (const auto& p : *a0divs) {
    for (const auto& q : *andivs) {
      for (int s : {1, -1}) {
        mpq_class cand(s * p, q);
        cand.canonicalize();
        if (eval_dense(monic, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// synthetic division by (x - r)
std::vector<mpq_class> deflate(const std::vector<mpq_class>& c,
                               const mpq_class& r) {
  std::vector<mpq_class> q(c.size() - 1);
  mpq_class carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * r;
  }
  return q;
}

struct QuadSplit {
  std::vector<mpq_class> f, g;
};

// monic quartic with no rational roots: (x^2+ax+b)(x^2+cx+d) over Q via the
// resolvent cubic; complete for rational quadratic splittings
std::optional<QuadSplit> split_quartic(const std::vector<mpq_class>& c) {
  mpq_class p = c[3], q = c[2], r = c[1], s = c[0];
  std::vector<mpq_class> resolvent{-(p * p * s - 4 * q * s + r * r),
                                   p * r - 4 * s, -q, 1};
  for (const auto& y : rational_roots(resolvent)) {
    mpq_class D = p * p - 4 * (q - y);
    auto sq = mpq_sqrt(D);
    if (!sq) continue;
    mpq_class a = (p + *sq) / 2, cc = (p - *sq) / 2;
    if (a != cc) {
      mpq_class b = (r - a * y) / (cc - a);
      mpq_class d = y - b;
      if (b * d == s && a * d + b * cc == r)
        return QuadSplit{{b, a, 1}, {d, cc, 1}};
    } else {
      if (a * y != r) continue;
      auto disc = mpq_sqrt(y * y - 4 * s);
      if (!disc) continue;
      mpq_class b = (y + *disc) / 2, d = (y - *disc) / 2;
      return QuadSplit{{b, a, 1}, {d, a, 1}};
    }
  }
  return std::nullopt;
}

// exact factorization of a squarefree univariate-in-v polynomial over Q,
// complete through degree 4; higher-degree leftovers come back unasserted
void factor_univariate_q(const Polynomial& p, std::size_t v,
                         std::vector<SplitFactor>& out) {
  std::vector<mpq_class> c = dense_q_coeffs(p, v);
  const RingPtr& ring = p.ring();
  MonomialOrder order = p.order();
  for (const auto& root : rational_roots(c)) {
    out.push_back({from_dense_q({-root, 1}, ring, v, order), true});
    c = deflate(c, root);
  }
  std::size_t deg = c.size() - 1;
  if (deg == 0) return;
  if (deg <= 3) {
    // roots are gone: degree <= 3 without rational roots is irreducible
    out.push_back({from_dense_q(c, ring, v, order), true});
    return;
  }
  if (deg == 4) {
    if (auto split = split_quartic(c)) {
      out.push_back({from_dense_q(split->f, ring, v, order), true});
      out.push_back({from_dense_q(split->g, ring, v, order), true});
    } else {
      out.push_back({from_dense_q(c, ring, v, order), true});
    }
    return;
  }
  out.push_back({from_dense_q(c, ring, v, order), false});
}

// root extraction over F_p by exhaustive search (small p); no-root leftovers
// of degree <= 3 are irreducible
void factor_univariate_fp(const Polynomial& p, std::size_t v,
                          std::vector<SplitFactor>& out) {
  std::uint32_t q = p.ring()->field().modulus();
  if (q > (1u << 20)) {
    out.push_back({p.monic(), p.total_degree() == 1});
    return;
  }
  const RingPtr& ring = p.ring();
  MonomialOrder order = p.order();
  Polynomial rest = p.monic();
  for (std::uint32_t c = 0; c < q && rest.degree_in(v) > 0; ++c) {
    Polynomial lin = Polynomial::variable(ring, v, order) -
                     Polynomial::constant(ring, static_cast<long>(c), order);
    if (auto quo = exact_quotient(rest, lin)) {
      out.push_back({lin, true});
      rest = *quo;
    }
  }
  std::uint32_t d = rest.degree_in(v);
  if (d == 0) return;
  out.push_back({rest.monic(), d <= 3});
}

}  // namespace

std::vector<SplitFactor> factor_split(const Polynomial& p,
                                      std::span<const Polynomial> hints) {
  if (p.is_zero()) fail(ErrorKind::InvalidInput, "cannot split zero");
  std::vector<Polynomial> work{radical_part(p)};
  if (work[0].is_constant()) return {};

  // gcd splitting against the hints, repeated to a fixed point
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Polynomial> next;
    for (const auto& w : work) {
      bool split = false;
      for (const auto& h : hints) {
        if (h.is_zero() || h.is_constant()) continue;
        Polynomial g = poly_gcd(w, h.with_order(w.order()));
        if (g.is_constant() || g == w.monic()) continue;
        next.push_back(g);
        next.push_back(exact_quotient(w, g)->monic());
        split = true;
        changed = true;
        break;
      }
      if (!split) next.push_back(w.monic());
    }
    work = std::move(next);
  }

  std::vector<SplitFactor> out;
  for (const auto& w : work) {
    if (w.is_constant()) continue;
    if (w.total_degree() == 1) {
      out.push_back({w.monic(), true});
      continue;
    }
    auto v = only_var(w);
    if (v) {
      if (w.ring()->field().is_rationals())
        factor_univariate_q(w, *v, out);
      else
        factor_univariate_fp(w, *v, out);
      continue;
    }
    out.push_back({w.monic(), false});
  }
  for (auto& f : out) f.poly = f.poly.monic();
  return out;
}

Hypersurface::Hypersurface(PRingPtr ring, std::vector<HFactor> factors)
    : ring_(std::move(ring)) {
  for (auto& f : factors) {
    if (*f.poly.ring() != *ring_->poly_ring())
      fail(ErrorKind::RingMismatch, "factor outside the ambient ring");
    if (f.poly.is_zero() || f.poly.is_constant())
      fail(ErrorKind::InvalidInput, "hypersurface factor must be nonconstant");
    Polynomial m = f.poly.with_order(ring_->order()).monic();
    if (radical_part(m) != m)
      fail(ErrorKind::InvalidInput,
           "hypersurface factor is not squarefree: " + m.to_string());
    factors_.push_back({m, f.irreducible});
  }
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (!poly_gcd(factors_[i].poly, factors_[j].poly).is_constant())
        fail(ErrorKind::InvalidInput,
             "hypersurface factors are not pairwise coprime");
}

Hypersurface Hypersurface::empty(PRingPtr ring) {
  return Hypersurface(std::move(ring), {});
}

Hypersurface Hypersurface::from_strings(const PRingPtr& ring,
                                        const std::vector<std::string>& factors,
                                        const std::vector<bool>& irreducible) {
  if (!irreducible.empty() && irreducible.size() != factors.size())
    fail(ErrorKind::InvalidInput,
         "irreducibility flag count does not match factor count");
  std::vector<HFactor> fs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    fs.push_back({ring->parse(factors[i]),
                  irreducible.empty() ? false : bool(irreducible[i])});
  return Hypersurface(ring, std::move(fs));
}

Polynomial Hypersurface::product_poly() const {
  Polynomial prod = Polynomial::constant(ring_->poly_ring(), 1, ring_->order());
  for (const auto& f : factors_) prod = prod * f.poly;
  return prod;
}

Ideal Hypersurface::vanishing_ideal() const {
  if (is_empty())
    return Ideal(ring_->poly_ring(),
                 {Polynomial::constant(ring_->poly_ring(), 1, ring_->order())});
  return ring_->chart_ideal({product_poly()});
}

std::string Hypersurface::to_string() const {
  if (is_empty()) return "(empty)";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += " * ";
    s += "(" + f.poly.to_string() + ")";
  }
  return s;
}

bool same_factor_sets(const Hypersurface& a, const Hypersurface& b) {
  if (!a.ring()->same_chart(*b.ring()))
    fail(ErrorKind::RingMismatch, "hypersurfaces on different charts");
  if (a.component_count() != b.component_count()) return false;
  std::vector<bool> used(b.component_count(), false);
  for (const auto& fa : a.factors()) {
    bool matched = false;
    for (std::size_t j = 0; j < b.factors().size() && !matched; ++j) {
      if (used[j]) continue;
      const auto& fb = b.factors()[j];
      bool eq = fa.poly == fb.poly;
      if (!eq && !a.ring()->ufd_chart())
        eq = ideal_equal(a.ring()->chart_ideal({fa.poly}),
                         a.ring()->chart_ideal({fb.poly}));
      if (eq) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace invkit
