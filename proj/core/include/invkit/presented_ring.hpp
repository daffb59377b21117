#ifndef INVKIT_PRESENTED_RING_HPP
#define INVKIT_PRESENTED_RING_HPP

#include "invkit/ideal.hpp"
#include "invkit/parse.hpp"
#include "invkit/rational_function.hpp"
#include "invkit/util.hpp"

namespace invkit {

/// A chart: finitely generated algebra presented as a localized polynomial
/// ring, optionally modulo a relation ideal. Ideals of the localization are
/// represented by their saturation at the inverted set inside the ambient
/// polynomial ring.
class PresentedRing {
 public:
  PresentedRing(CoeffField field, std::vector<std::string> vars,
                std::vector<Polynomial> relations,
                std::vector<Polynomial> inverted, bool asserted_domain = false);

  const RingPtr& poly_ring() const { return ring_; }
  const CoeffField& field() const { return ring_->field(); }
  std::size_t arity() const { return ring_->arity(); }
  MonomialOrder order() const { return MonomialOrder::grevlex(); }

  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& inverted() const { return inverted_; }
  bool asserted_domain() const { return asserted_domain_; }

  bool has_relations() const { return !relations_.empty(); }
  /// UFD-dependent operations require a localized polynomial ring.
  bool ufd_chart() const { return relations_.empty(); }
  void require_ufd(const char* what) const;

  const Ideal& relation_ideal() const;
  /// sat(relations, product of inverted generators)
  const Ideal& saturated_relations() const;
  Polynomial inverted_product() const;

  /// Ideal of the chart spanned by relations + extra, saturated at the
  /// inverted set.
  Ideal chart_ideal(std::vector<Polynomial> extra) const;

  /// d is a unit of the localization: its irreducible support lies in the
  /// inverted set (decided by gcd peeling against the inverted product).
  bool unit_in_localization(const Polynomial& d) const;

  /// V(q) misses the chart entirely (saturated ideal becomes the unit
  /// ideal).
  bool empty_on_chart(const Polynomial& q) const;

  /// Membership in the chart ideal generated by relations + I.
  bool contains_mod_relations(const Ideal& saturated, const Polynomial& p) const;

  Polynomial parse(std::string_view text) const {
    return parse_polynomial(text, ring_, order());
  }
  RationalFunction parse_rf(std::string_view num, std::string_view den) const;

  bool same_chart(const PresentedRing& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> inverted_;
  bool asserted_domain_ = false;
  Lazy<Ideal> relation_ideal_;
  Lazy<Ideal> saturated_relations_;
};

using PRingPtr = std::shared_ptr<const PresentedRing>;

PRingPtr make_ring(CoeffField field, std::vector<std::string> vars,
                   std::vector<Polynomial> relations = {},
                   std::vector<Polynomial> inverted = {},
                   bool asserted_domain = false);

/// Convenience: plain polynomial chart with relations/inversions parsed
/// from text after construction of the underlying ring.
PRingPtr make_ring_parsed(CoeffField field, std::vector<std::string> vars,
                          const std::vector<std::string>& relations,
                          const std::vector<std::string>& inverted,
                          bool asserted_domain = false);

}  // namespace invkit

#endif
