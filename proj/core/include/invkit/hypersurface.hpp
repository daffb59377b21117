#ifndef INVKIT_HYPERSURFACE_HPP
#define INVKIT_HYPERSURFACE_HPP

#include <span>

#include "invkit/presented_ring.hpp"

namespace invkit {

struct HFactor {
  Polynomial poly;          // monic, nonconstant, squarefree
  bool irreducible = false; // asserted by the user or decided by splitting
};

/// Pure-codimension-one closed subset of a chart, represented as a product
/// of pairwise-coprime squarefree factors. The vanishing ideal is the chart
/// ideal of the product, radical by construction. The empty hypersurface is
/// a distinguished value.
class Hypersurface {
 public:
  Hypersurface(PRingPtr ring, std::vector<HFactor> factors);
  static Hypersurface empty(PRingPtr ring);
  static Hypersurface from_strings(const PRingPtr& ring,
                                   const std::vector<std::string>& factors,
                                   const std::vector<bool>& irreducible);

  const PRingPtr& ring() const { return ring_; }
  const std::vector<HFactor>& factors() const { return factors_; }
  bool is_empty() const { return factors_.empty(); }
  std::size_t component_count() const { return factors_.size(); }

  Polynomial product_poly() const;
  Ideal vanishing_ideal() const;

  std::string to_string() const;

 private:
  PRingPtr ring_;
  std::vector<HFactor> factors_;
};

/// Equality of the underlying component sets on the chart: every factor of
/// one side generates the same chart ideal as some factor of the other,
/// bijectively.
bool same_factor_sets(const Hypersurface& a, const Hypersurface& b);

/// Effective divisor: pairwise-coprime squarefree factors with
/// multiplicities.
struct DivisorTerm {
  Polynomial factor;
  std::uint32_t multiplicity;
};
struct EffectiveDivisor {
  std::vector<DivisorTerm> terms;
  bool empty() const { return terms.empty(); }
};

struct SplitFactor {
  Polynomial poly;
  bool irreducible;
};

/// Splits a squarefree polynomial into coprime factors using gcds against
/// the hints, plus exact univariate factorization (over Q up to degree 4;
/// over small prime fields by root search). Factors that cannot be certified
/// irreducible come back unasserted.
std::vector<SplitFactor> factor_split(const Polynomial& p,
                                      std::span<const Polynomial> hints = {});

}  // namespace invkit

#endif
