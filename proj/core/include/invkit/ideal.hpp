#ifndef INVKIT_IDEAL_HPP
#define INVKIT_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "invkit/polynomial.hpp"

namespace invkit {

/// Budget for basis computations. Exceeding a cap raises ResourceLimit —
/// blowup must fail loudly, never silently.
struct GroebnerBudget {
  std::size_t max_basis = 5000;   // polynomials held during completion
  std::size_t max_terms = 100000; // terms per intermediate polynomial
};

GroebnerBudget default_groebner_budget();
void set_default_groebner_budget(const GroebnerBudget& b);

using BasisPtr = std::shared_ptr<const std::vector<Polynomial>>;

/// Finitely generated ideal with a per-order cache of its reduced Groebner
/// basis. Generators are immutable; the cache is compute-once/read-many
/// (fills are deterministic, so racing fills agree).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  BasisPtr basis(MonomialOrder order,
                 std::optional<GroebnerBudget> budget = {}) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, BasisPtr> by_order;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Unique reduced Groebner basis (monic, auto-reduced, sorted by leading
/// monomial descending); deterministic across runs and thread counts.
BasisPtr groebner_basis(const Ideal& I, MonomialOrder order,
                        std::optional<GroebnerBudget> budget = {});

/// Remainder of p on full division by the reduced basis; zero iff p lies in
/// the ideal. Computed under p's own order.
Polynomial normal_form(const Polynomial& p, const Ideal& I);

bool ideal_contains(const Ideal& I, const Polynomial& p);
bool is_unit_ideal(const Ideal& I);
bool is_zero_ideal(const Ideal& I);

/// Both inclusions, decided against the reduced bases.
bool ideal_equal(const Ideal& I, const Ideal& J);

/// I ∩ k[keep] where keep marks the surviving variables, presented by the
/// basis elements free of the eliminated ones (same ambient ring).
Ideal elimination_ideal(const Ideal& I, const std::vector<bool>& keep);

/// (I : f^∞) via elimination of t from I + (1 - t f).
Ideal saturation(const Ideal& I, const Polynomial& f);

/// p ∈ √I, decided by adjoining 1 - t p and testing the unit ideal.
bool radical_membership(const Polynomial& p, const Ideal& I);

/// Principal-ideal radicality: (a) is radical iff a is squarefree. Works in
/// any characteristic over the supported (perfect) base fields.
bool is_radical_principal(const Polynomial& a);

}  // namespace invkit

#endif
