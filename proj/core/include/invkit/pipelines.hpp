#ifndef INVKIT_PIPELINES_HPP
#define INVKIT_PIPELINES_HPP

#include "invkit/doperators.hpp"
#include "invkit/invariant.hpp"

namespace invkit {

/// Chart with a dominant rational self-map. Dominance is verified at
/// construction.
class DynamicalSystem {
 public:
  explicit DynamicalSystem(RationalMap map);
  const PRingPtr& ring() const { return map_.source(); }
  const RationalMap& map() const { return map_; }

 private:
  RationalMap map_;
};

/// Correspondence on X presented by a chart of its graph locus with the two
/// coordinate projections; both projections must be dominant. Primality of
/// the graph ideal and the finite-to-finite property are user assertions.
class SelfCorrespondence {
 public:
  SelfCorrespondence(PRingPtr xring, PRingPtr graph, RationalMap proj1,
                     RationalMap proj2, bool finite_asserted);
  static SelfCorrespondence from_graph(const DynamicalSystem& sys);

  const PRingPtr& xring() const { return xring_; }
  const PRingPtr& graph() const { return graph_; }
  const RationalMap& proj1() const { return proj1_; }
  const RationalMap& proj2() const { return proj2_; }
  bool finite_asserted() const { return finite_asserted_; }

 private:
  PRingPtr xring_, graph_;
  RationalMap proj1_, proj2_;
  bool finite_asserted_;
};

/// φ*H = H as component sets (proper-transform equality).
bool totally_invariant_check(const DynamicalSystem& sys, const Hypersurface& H,
                             std::span<const Polynomial> hints = {});

/// Proper transforms under the two projections agree as component sets on
/// the graph chart.
bool correspondence_invariant_check(const SelfCorrespondence& corr,
                                    const Hypersurface& H,
                                    std::span<const Polynomial> hints = {});

enum class SearchStatus { Found, None, Refused };

struct SearchOutcome {
  SearchStatus status;
  std::optional<InvariantCertificate> certificate;
  std::vector<std::string> diagnostics;
  std::vector<std::string> assumptions;  // unverified user assertions
};

/// Invariant function of a dynamical system from totally invariant witness
/// hypersurfaces: searches g with g∘φ = g. Over a prime field the map must
/// first pass the separability (Jacobian) hypothesis, else the search is
/// refused. Witnesses failing the invariance check are pruned with a
/// report.
SearchOutcome search_map_invariant(const DynamicalSystem& sys,
                                   const std::vector<Hypersurface>& witnesses);

/// Rational first integral of a derivation from witness hypersurfaces whose
/// factors satisfy the stability condition δ(a) ∈ (a); refused when a
/// factor violates it. The certificate satisfies δ(g) = 0 exactly.
SearchOutcome search_first_integral(const Derivation& d,
                                    const std::vector<Hypersurface>& witnesses);

/// D-constant rational function of a D-ring structure from witnesses that
/// pass the extension-ideal total-invariance criterion. Routing: radical
/// (nilpotent) direction through the first-integral search, semisimple
/// directions through the endomorphism search; every candidate is finally
/// verified D-constant (e(g) = g ⊗ 1) exactly.
SearchOutcome search_dring_invariant(const DRingStructure& D,
                                     const std::vector<Hypersurface>& witnesses);

/// Level sets V(num(g) - c·den(g)), squarefree-split. Degenerate constants
/// (level polynomial constant, or empty on the chart) are skipped with a
/// report.
std::vector<Hypersurface> level_sets(const RationalFunction& g,
                                     const std::vector<Coeff>& constants,
                                     const PRingPtr& ring,
                                     std::vector<std::string>* skipped = nullptr);

struct FrobeniusPoint {
  Coeff point;
  EffectiveDivisor scheme_divisor;  // multiplicity-p pullback
  Hypersurface transform;           // the point itself
  bool scheme_radical;
};

struct FrobeniusReport {
  std::uint32_t p;
  std::vector<FrobeniusPoint> points;
  bool separable;              // always false for the p-power map
  SearchStatus search_status;  // Refused
  std::vector<std::string> diagnostics;
};

/// The p-power dynamical system on the affine line over F_p: non-radical
/// scheme pullbacks of multiplicity exactly p, totally invariant points,
/// failed separability, and a refused invariant search.
FrobeniusReport frobenius_demo(std::uint32_t p);

}  // namespace invkit

#endif
