#ifndef INVKIT_INVARIANT_HPP
#define INVKIT_INVARIANT_HPP

#include <gmpxx.h>

#include "invkit/rational_map.hpp"

namespace invkit {

/// Pairwise-coprime squarefree factors on a UFD chart against which units
/// and witnesses decompose by exact division. Irreducibility is asserted,
/// not verified; unverified assertions are surfaced in reports.
class FactorBase {
 public:
  FactorBase(PRingPtr ring, std::vector<Polynomial> factors,
             std::vector<bool> irreducible_asserted = {});

  const PRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& factors() const { return factors_; }
  bool asserted_irreducible(std::size_t i) const { return asserted_[i]; }
  std::size_t size() const { return factors_.size(); }

 private:
  PRingPtr ring_;
  std::vector<Polynomial> factors_;
  std::vector<bool> asserted_;
};

/// Factor base for the unit group of the localization: the inverted
/// generators split against the hints.
FactorBase inverted_factor_base(const PRingPtr& ring,
                                std::span<const Polynomial> hints = {});

struct UnitDecomposition {
  Coeff constant;                    // nonzero
  std::vector<mpz_class> exponents;  // over the base factors
};

/// Scheme-theoretic pullback equality under the two maps — the witness
/// hypothesis of the whole construction.
bool verify_witness(const RationalMap& f1, const RationalMap& f2,
                    const Hypersurface& a);

/// u = f1^*(a) / f2^*(a) in canonical form. Unit-ness of u on the source
/// chart is certified later by decompose_unit.
RationalFunction compute_unit(const RationalMap& f1, const RationalMap& f2,
                              const Polynomial& a);

/// u = constant · Π base_i^{e_i}, exactly, by repeated exact division.
/// Raises ChartError when a residual nonconstant cofactor survives (u is
/// not a unit of this localization: the chart must be shrunk).
UnitDecomposition decompose_unit(const RationalFunction& u,
                                 const FactorBase& base);

struct IndependenceReport {
  bool independent;
  std::vector<mpz_class> relation;  // nontrivial witness when dependent
};

/// Multiplicative independence modulo constants, decided via the integer
/// kernel of the factor exponent matrix.
IndependenceReport multiplicative_independence(
    const std::vector<RationalFunction>& items, const FactorBase& base);

/// Basis of {e : Π lambda_r^{e_r} = 1}. Over Q: trial-division prime
/// factorization (bound 10^6, loud failure beyond) plus a sign coordinate.
/// Over F_p: discrete logarithms in the cyclic unit group (small p).
std::vector<std::vector<mpz_class>> rational_multiplicative_kernel(
    const std::vector<Coeff>& lambdas);

/// Certificate: the invariant function plus the full construction
/// transcript, re-verifiable independently of how it was found.
struct InvariantCertificate {
  RationalFunction g;
  std::vector<std::vector<mpz_class>> unit_kernel;  // stage-3 vectors k_r
  std::vector<Coeff> lambdas;                       // λ_r per kernel vector
  std::vector<mpz_class> lambda_relation;           // stage-4 vector e
  std::vector<mpz_class> witness_exponents;         // net exponent per witness
  bool verified_agreement = false;
  bool verified_nonconstant = false;
};

struct InvariantSearchResult {
  std::optional<InvariantCertificate> certificate;
  std::vector<std::string> diagnostics;
};

/// The unit / exponent-lattice pipeline: verify witnesses, prune
/// multiplicative dependence, decompose units against the inverted-set
/// base, take the two integer kernels, assemble g, and re-verify exactly.
/// "none" reports which stage's kernel was trivial.
InvariantSearchResult find_invariant_function(
    const RationalMap& f1, const RationalMap& f2,
    const std::vector<Hypersurface>& witnesses);

/// Re-runs both exact checks from scratch, ignoring the transcript.
bool verify_certificate(const InvariantCertificate& cert,
                        const RationalMap& f1, const RationalMap& f2);

}  // namespace invkit

#endif
