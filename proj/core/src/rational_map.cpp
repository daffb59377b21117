#include "invkit/rational_map.hpp"

#include "invkit/polynomial_gcd.hpp"

namespace invkit {

RationalMap::RationalMap(PRingPtr source, PRingPtr target,
                         std::vector<RationalFunction> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != target_->arity())
    fail(ErrorKind::InvalidInput,
         "map needs one image per target variable");
  for (const auto& g : images_) {
    if (*g.ring() != *source_->poly_ring())
      fail(ErrorKind::RingMismatch, "image outside the source ring");
    if (!source_->unit_in_localization(g.den()))
      fail(ErrorKind::NotWellDefined,
           "image denominator is not a unit of the source chart: " +
               g.den().to_string());
  }
  // target relations must pull back into the saturated source relations
  for (const auto& r : target_->relations()) {
    RationalFunction pulled = substitute(r, images_);
    if (!ideal_contains(source_->saturated_relations(), pulled.num()))
      fail(ErrorKind::NotWellDefined,
           "target relation does not pull back into the source relations: " +
               r.to_string());
  }
}

RationalMap RationalMap::identity(const PRingPtr& ring) {
  std::vector<RationalFunction> images;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    images.push_back(
        RationalFunction::variable(ring->poly_ring(), i, ring->order()));
  return RationalMap(ring, ring, images);
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  if (!inner.target()->same_chart(*outer.source()))
    fail(ErrorKind::RingMismatch, "maps do not compose");
  std::vector<RationalFunction> images;
  images.reserve(outer.images().size());
  for (const auto& g : outer.images())
    images.push_back(substitute(g, inner.images()));
  return RationalMap(inner.source(), outer.target(), images);
}

RationalFunction pullback_function(const RationalMap& map,
                                   const RationalFunction& g) {
  if (*g.ring() != *map.target()->poly_ring())
    fail(ErrorKind::RingMismatch, "function outside the target ring");
  return substitute(g, map.images());
}

}  // namespace invkit
