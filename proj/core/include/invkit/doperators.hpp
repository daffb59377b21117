#ifndef INVKIT_DOPERATORS_HPP
#define INVKIT_DOPERATORS_HPP

#include "invkit/derivation.hpp"
#include "invkit/rational_map.hpp"

namespace invkit {

/// Finite dimensional commutative unital algebra B over the coefficient
/// field, given by structure constants for a basis (eps_0, ..., eps_l),
/// together with the quotient maps of its (user-supplied) maximal ideals.
/// Normalization: pi_0(eps_0) = 1 and eps_1, ..., eps_l in ker(pi_0).
class FiniteAlgebra {
 public:
  FiniteAlgebra(CoeffField field, std::vector<std::string> labels,
                std::vector<std::vector<std::vector<Coeff>>> mul,
                std::vector<std::vector<Coeff>> projections);

  static FiniteAlgebra dual_numbers(const CoeffField& f);
  /// K x K with basis ((1,0), (0,1)); projections onto both coordinates.
  static FiniteAlgebra split_pair(const CoeffField& f);
  /// K[e]/e^3 with basis (1, e, e^2).
  static FiniteAlgebra jet_plane(const CoeffField& f);

  std::size_t dim() const { return mul_.size(); }
  const CoeffField& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Coordinates of 1_B in the basis (first coordinate is always 1).
  const std::vector<Coeff>& unit() const { return unit_; }
  bool epsilon0_is_unit() const;

  std::size_t projection_count() const { return projections_.size(); }
  const Coeff& proj(std::size_t j, std::size_t i) const {
    return projections_[j][i];
  }
  /// eps_i * eps_j in basis coordinates.
  const std::vector<Coeff>& mul_row(std::size_t i, std::size_t j) const {
    return mul_[i][j];
  }

  /// Basis indices lying in every listed maximal ideal (Jacobson radical).
  std::vector<std::size_t> radical_indices() const;
  /// Smallest radical index i with no quadratic feedback
  /// (c_{jk}^i = 0 for all j,k >= 1); at such an index the operator is a
  /// derivation, provided eps_0 = 1_B.
  std::optional<std::size_t> derivation_direction() const;

 private:
  CoeffField field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<Coeff>>> mul_;
  std::vector<std::vector<Coeff>> projections_;
  std::vector<Coeff> unit_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// Element of R ⊗ B in the basis (1 ⊗ eps_i): one component per basis slot.
struct TensorElement {
  std::vector<RationalFunction> comps;
  bool operator==(const TensorElement& o) const { return comps == o.comps; }
};

TensorElement tensor_zero(const FiniteAlgebra& B, const RingPtr& ring,
                          MonomialOrder order);
/// r ⊗ 1_B.
TensorElement tensor_scalar(const FiniteAlgebra& B, const RationalFunction& r);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_sub(const TensorElement& a, const TensorElement& b);
TensorElement tensor_mul(const FiniteAlgebra& B, const TensorElement& a,
                         const TensorElement& b);
/// Polynomial evaluation over the tensor algebra.
TensorElement tensor_eval(const FiniteAlgebra& B, const Polynomial& p,
                          const std::vector<TensorElement>& images,
                          const RingPtr& ring, MonomialOrder order);
/// pi_j applied componentwise: Σ comps_i · pi_j(eps_i).
RationalFunction tensor_project(const FiniteAlgebra& B, std::size_t j,
                                const TensorElement& t);

/// D-ring structure e: R -> R ⊗ B, a ring homomorphism sectioned by pi_0.
class DRingStructure {
 public:
  DRingStructure(PRingPtr ring, AlgebraPtr algebra,
                 std::vector<TensorElement> e_images);

  const PRingPtr& ring() const { return ring_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<TensorElement>& e_images() const { return e_images_; }

  /// e(r) by substitution into the e-images; the pi_0 component equals r.
  TensorElement e_apply(const Polynomial& r) const;
  /// Components of e(r) on eps_1, ..., eps_l.
  std::vector<RationalFunction> extract_operators(const Polynomial& r) const;
  /// sigma_j = pi_j ∘ e as self-maps of R; sigma_0 is the identity.
  std::vector<RationalMap> associated_endomorphisms() const;

  /// The derivation hiding in the radical direction, when the algebra has
  /// one (eps_0 = 1_B and no quadratic feedback).
  std::optional<Derivation> radical_derivation() const;

  /// e(g) = g ⊗ 1 for a fraction, decided by cross-multiplication.
  bool is_d_constant(const RationalFunction& g) const;

 private:
  PRingPtr ring_;
  AlgebraPtr algebra_;
  std::vector<TensorElement> e_images_;
};

/// Operator-wise total invariance: every operator component of e(gen) stays
/// in I, and every associated endomorphism maps I onto I.
bool totally_invariant_by_operators(const DRingStructure& D, const Ideal& I);

/// Extension-ideal criterion: e(I)(R⊗B) = I(R⊗B), decided by Groebner
/// bases in the presented tensor ring. Pre: R has zero relation ideal.
bool totally_invariant_by_extension(const DRingStructure& D, const Ideal& I);

struct Correspondence {
  PRingPtr zring;    // Spec(R ⊗ B) as a presented chart
  RationalMap phi1;  // induced by e
  RationalMap phi2;  // induced by r -> r ⊗ 1
};

/// Presents Spec(R⊗B) with its two maps to Spec(R); scheme pullbacks of
/// V(a) under the two maps agree exactly when the extension criterion holds
/// for (a). Pre: R has zero relation ideal.
Correspondence build_correspondence(const DRingStructure& D);

/// Rational map into a dual-numbers extension, in tensor form: one
/// two-component image per source variable.
struct TensorMap {
  PRingPtr source;
  PRingPtr base;  // chart carrying the tensor components
  AlgebraPtr algebra;
  std::vector<TensorElement> images;
};

TensorElement apply_tensor_map(const TensorMap& f, const Polynomial& u);

/// Reads a derivation off a pair of maps into the dual numbers that agree
/// modulo the nilpotent: δ(t) is the eps-coefficient of f1(t) - f2(t).
/// The shared base map must be the identity of the source chart.
Derivation dual_numbers_derivation(const TensorMap& f1, const TensorMap& f2);

/// The e-map of a derivation: r -> r + δ(r)·eps (tensor form).
TensorMap derivation_to_tensor_map(const Derivation& d);

}  // namespace invkit

#endif
