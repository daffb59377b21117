#ifndef INVKIT_TESTS_SUPPORT_HPP
#define INVKIT_TESTS_SUPPORT_HPP

#include <random>

#include <invkit/invariant.hpp>
#include <invkit/linalg.hpp>
#include <invkit/parse.hpp>
#include <invkit/pipelines.hpp>
#include <invkit/polynomial_gcd.hpp>

namespace testsupport {

using namespace invkit;

inline RingPtr qring(std::vector<std::string> vars) {
  return make_poly_ring(CoeffField::rationals(), std::move(vars));
}

inline Polynomial qp(const char* text, const RingPtr& ring) {
  return parse_polynomial(text, ring);
}

inline Polynomial qp(const char* text, const PRingPtr& ring) {
  return ring->parse(text);
}

inline RationalFunction rf(const char* num, const char* den,
                           const PRingPtr& ring) {
  return ring->parse_rf(num, den);
}

// deterministic random polynomial: up to n_terms terms of total degree
// <= max_deg, small integer coefficients (possibly zero polynomial)
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring,
                              std::uint32_t max_deg, std::size_t n_terms,
                              long coeff_bound = 5) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::vector<Term> terms;
  for (std::size_t t = 0; t < n_terms; ++t) {
    std::vector<std::uint32_t> exps(ring->arity(), 0);
    std::uint32_t budget = deg(rng);
    for (std::size_t v = 0; v < ring->arity() && budget > 0; ++v) {
      std::uniform_int_distribution<std::uint32_t> pick(0, budget);
      exps[v] = pick(rng);
      budget -= exps[v];
    }
    long c = coeff(rng);
    Coeff cv = ring->field().is_rationals()
                   ? Coeff::integer(c)
                   : Coeff::residue(c, ring->field().modulus());
    if (cv.is_zero()) continue;
    terms.push_back({Monomial(std::move(exps)), cv});
  }
  return Polynomial::from_terms(ring, MonomialOrder::grevlex(),
                                std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng,
                                      const RingPtr& ring,
                                      std::uint32_t max_deg,
                                      std::size_t n_terms,
                                      long coeff_bound = 5) {
  while (true) {
    Polynomial p = random_poly(rng, ring, max_deg, n_terms, coeff_bound);
    if (!p.is_zero()) return p;
  }
}

// fiber polynomial y^k + tail with deg_y(tail) < k: the y-leading
// coefficient stays constant, so every line x = c maps onto the line and
// no tested level set degenerates
inline Polynomial planted_fiber_poly(std::mt19937_64& rng, const RingPtr& ring,
                                     std::uint32_t k) {
  Polynomial tail = random_poly(rng, ring, 2, 3);
  std::vector<Term> kept;
  for (const auto& t : tail.terms())
    if (t.mono[1] < k) kept.push_back(t);
  return Polynomial::variable(ring, 1).pow(k) +
         Polynomial::from_terms(ring, MonomialOrder::grevlex(), kept);
}

// all monomials of total degree <= d
inline std::vector<Monomial> monomials_up_to(const RingPtr& ring,
                                             std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(ring->arity(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v,
                                                            std::uint32_t left) {
    if (v == ring->arity()) {
      out.push_back(Monomial(exps));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[v] = e;
      rec(v + 1, left - e);
    }
    exps[v] = 0;
  };
  rec(0, d);
  return out;
}

// Brute-force ideal membership over Q, independent of the Groebner path:
// p ∈ (gens) with cofactor degrees <= cofdeg iff the linear system
// Σ_i c_i g_i = p in the cofactor coefficients is consistent.
inline bool oracle_membership(const Polynomial& p,
                              const std::vector<Polynomial>& gens,
                              std::uint32_t cofdeg) {
  const RingPtr& ring = p.ring();
  std::vector<Monomial> cof = monomials_up_to(ring, cofdeg);
  std::uint32_t outdeg = cofdeg;
  for (const auto& g : gens)
    outdeg = std::max<std::uint32_t>(
        outdeg, cofdeg + static_cast<std::uint32_t>(g.total_degree()));
  outdeg = std::max<std::uint32_t>(
      outdeg, static_cast<std::uint32_t>(p.total_degree()));
  std::vector<Monomial> rowspace = monomials_up_to(ring, outdeg);
  auto row_of = [&](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < rowspace.size(); ++i)
      if (rowspace[i] == m) return i;
    throw std::logic_error("monomial outside the oracle row space");
  };

  std::size_t unknowns = gens.size() * cof.size();
  QMatrix a(rowspace.size(), QRow(unknowns, mpq_class(0)));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < cof.size(); ++k) {
      std::size_t col = i * cof.size() + k;
      for (const auto& t : gens[i].terms())
        a[row_of(t.mono * cof[k])][col] += t.coeff.rat();
    }
  QRow b(rowspace.size(), mpq_class(0));
  for (const auto& t : p.terms()) b[row_of(t.mono)] = t.coeff.rat();
  return q_solve(a, b).has_value();
}

}  // namespace testsupport

#endif
