#ifndef INVKIT_RATIONAL_MAP_HPP
#define INVKIT_RATIONAL_MAP_HPP

#include "invkit/hypersurface.hpp"

namespace invkit {

/// Dominant-near rational map of charts, Spec(source) -> Spec(target),
/// presented dually: one rational function over the source per target
/// variable. Construction enforces that the map is a regular morphism on
/// the presented charts: image denominators are units of the source
/// localization, and target relations map into the (saturated) source
/// relation ideal.
class RationalMap {
 public:
  RationalMap(PRingPtr source, PRingPtr target,
              std::vector<RationalFunction> images);

  static RationalMap identity(const PRingPtr& ring);

  const PRingPtr& source() const { return source_; }
  const PRingPtr& target() const { return target_; }
  const std::vector<RationalFunction>& images() const { return images_; }

  bool is_self_map() const { return source_->same_chart(*target_); }

 private:
  PRingPtr source_, target_;
  std::vector<RationalFunction> images_;
};

/// Scheme maps compose as outer ∘ inner: inner: Z -> Y, outer: Y -> X.
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

/// g ∘ φ, exact.
RationalFunction pullback_function(const RationalMap& map,
                                   const RationalFunction& g);

/// Extension ideal of the vanishing ideal under pullback, saturated at the
/// source inverted set; may be non-reduced. Raises when the pullback
/// vanishes identically (H contains the image closure).
Ideal scheme_inverse_image(const RationalMap& map, const Hypersurface& H);

/// Closure of the set-theoretic preimage: radical of the scheme pullback's
/// generator, split into factors; factors that are units on the source
/// chart are dropped (they cut the empty set there).
Hypersurface set_inverse_closure(const RationalMap& map, const Hypersurface& H,
                                 std::span<const Polynomial> hints = {});

/// Vanishing ideal of the Zariski closure of the image of V(C): graph
/// ideal, saturation at the denominators and the source inverted set, then
/// elimination of the source variables.
Ideal image_closure(const RationalMap& map, const Ideal& C);

/// Sub-product of the set-inverse closure whose factors map onto
/// components of H; the empty hypersurface when nothing dominates. All
/// closure factors must carry irreducibility assertions.
Hypersurface proper_transform(const RationalMap& map, const Hypersurface& H,
                              std::span<const Polynomial> hints = {});

struct PullbackComparison {
  Ideal scheme;
  Hypersurface proper;
  bool scheme_is_radical;
  bool agree;
};

PullbackComparison compare_pullbacks(const RationalMap& map,
                                     const Hypersurface& H,
                                     std::span<const Polynomial> hints = {});

/// Dense image: the closure of the image of the whole source chart equals
/// the target chart.
bool dominance_check(const RationalMap& map);

/// Generic-rank Jacobian criterion for separable (geometrically reduced)
/// generic fibres. Pre: target has zero relation ideal; map dominant.
bool separability_check(const RationalMap& map);

/// Factored zero/pole divisors of g against user factor hints (UFD chart).
std::pair<EffectiveDivisor, EffectiveDivisor> divisor_support(
    const RationalFunction& g, const PresentedRing& ring,
    std::span<const Polynomial> factor_hints);

}  // namespace invkit

#endif
