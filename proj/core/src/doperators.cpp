#include "invkit/doperators.hpp"

#include <algorithm>

#include "invkit/polynomial_gcd.hpp"

namespace invkit {

namespace {

// dense solve A u = rhs over the coefficient field; A is n x m row-major
std::optional<std::vector<Coeff>> coeff_solve(
    std::vector<std::vector<Coeff>> a, std::vector<Coeff> rhs,
    const CoeffField& f, std::size_t unknowns) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < a.size(); ++col) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[rank], a[sel]);
    Coeff inv = a[rank][col].inverse();
    for (auto& x : a[rank]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Coeff fac = a[r][col];
      for (std::size_t c = 0; c <= unknowns; ++c)
        a[r][c] = a[r][c] - fac * a[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < a.size(); ++r)
    if (!a[r][unknowns].is_zero()) return std::nullopt;
  std::vector<Coeff> u(unknowns, Coeff::zero(f));
  for (std::size_t r = 0; r < rank; ++r) u[pivot_col[r]] = a[r][unknowns];
  return u;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(CoeffField field, std::vector<std::string> labels,
                             std::vector<std::vector<std::vector<Coeff>>> mul,
                             std::vector<std::vector<Coeff>> projections)
    : field_(field), labels_(std::move(labels)), mul_(std::move(mul)),
      projections_(std::move(projections)) {
  std::size_t n = mul_.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "algebra dimension must be >= 1");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i)
      labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != n)
    fail(ErrorKind::InvalidInput, "label count does not match dimension");
  for (const auto& row : mul_) {
    if (row.size() != n)
      fail(ErrorKind::InvalidInput, "structure constant table is not square");
    for (const auto& cell : row) {
      if (cell.size() != n)
        fail(ErrorKind::InvalidInput, "structure constant vector arity");
      for (const auto& c : cell)
        if (c.field() != field_)
          fail(ErrorKind::RingMismatch, "structure constant field mismatch");
    }
  }
  // commutativity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mul_[i][j] != mul_[j][i])
        fail(ErrorKind::InvalidInput, "algebra is not commutative");
  // associativity on basis triples
  auto mul_vec = [&](const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    std::vector<Coeff> out(n, Coeff::zero(field_));
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        Coeff prod = a[i] * b[j];
        for (std::size_t m = 0; m < n; ++m)
          out[m] = out[m] + prod * mul_[i][j][m];
      }
    }
    return out;
  };
  auto basis_vec = [&](std::size_t i) {
    std::vector<Coeff> v(n, Coeff::zero(field_));
    v[i] = Coeff::one(field_);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul_vec(mul_[i][j], basis_vec(k)) !=
            mul_vec(basis_vec(i), mul_[j][k]))
          fail(ErrorKind::InvalidInput, "algebra is not associative");
  // unit: solve u * eps_j = eps_j for all j
  {
    std::vector<std::vector<Coeff>> a;
    std::vector<Coeff> rhs;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<Coeff> row(n, Coeff::zero(field_));
        for (std::size_t i = 0; i < n; ++i) row[i] = mul_[i][j][m];
        a.push_back(row);
        rhs.push_back(m == j ? Coeff::one(field_) : Coeff::zero(field_));
      }
    }
    auto u = coeff_solve(a, rhs, field_, n);
    if (!u) fail(ErrorKind::InvalidInput, "algebra has no unit element");
    unit_ = *u;
  }
  // projections: algebra homomorphisms with the basis normalization
  if (projections_.empty())
    fail(ErrorKind::InvalidInput, "at least pi_0 must be supplied");
  for (const auto& pi : projections_) {
    if (pi.size() != n)
      fail(ErrorKind::InvalidInput, "projection functional arity");
    Coeff unit_val = Coeff::zero(field_);
    for (std::size_t i = 0; i < n; ++i)
      unit_val = unit_val + pi[i] * unit_[i];
    if (!unit_val.is_one())
      fail(ErrorKind::InvalidInput, "projection does not send 1 to 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Coeff lhs = Coeff::zero(field_);
        for (std::size_t m = 0; m < n; ++m)
          lhs = lhs + pi[m] * mul_[i][j][m];
        if (lhs != pi[i] * pi[j])
          fail(ErrorKind::InvalidInput,
               "projection is not an algebra homomorphism");
      }
  }
  if (!projections_[0][0].is_one())
    fail(ErrorKind::InvalidInput, "pi_0(eps_0) must be 1");
  for (std::size_t i = 1; i < n; ++i)
    if (!projections_[0][i].is_zero())
      fail(ErrorKind::InvalidInput, "eps_1, ..., eps_l must lie in ker(pi_0)");
}

FiniteAlgebra FiniteAlgebra::dual_numbers(const CoeffField& f) {
  Coeff o = Coeff::one(f), z = Coeff::zero(f);
  std::vector<std::vector<std::vector<Coeff>>> mul{
      {{o, z}, {z, o}}, {{z, o}, {z, z}}};
  return FiniteAlgebra(f, {"one", "eps"}, mul, {{o, z}});
}

FiniteAlgebra FiniteAlgebra::split_pair(const CoeffField& f) {
  Coeff o = Coeff::one(f), z = Coeff::zero(f);
  // basis eps_0 = (1,0), eps_1 = (0,1)
  std::vector<std::vector<std::vector<Coeff>>> mul{
      {{o, z}, {z, z}}, {{z, z}, {z, o}}};
  return FiniteAlgebra(f, {"left", "right"}, mul, {{o, z}, {z, o}});
}

FiniteAlgebra FiniteAlgebra::jet_plane(const CoeffField& f) {
  Coeff o = Coeff::one(f), z = Coeff::zero(f);
  std::vector<std::vector<std::vector<Coeff>>> mul{
      {{o, z, z}, {z, o, z}, {z, z, o}},
      {{z, o, z}, {z, z, o}, {z, z, z}},
      {{z, z, o}, {z, z, z}, {z, z, z}}};
  return FiniteAlgebra(f, {"one", "eps", "eps2"}, mul, {{o, z, z}});
}

bool FiniteAlgebra::epsilon0_is_unit() const {
  if (!unit_[0].is_one()) return false;
  for (std::size_t i = 1; i < unit_.size(); ++i)
    if (!unit_[i].is_zero()) return false;
  return true;
}

std::vector<std::size_t> FiniteAlgebra::radical_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < dim(); ++i) {
    bool in_all = true;
    for (const auto& pi : projections_)
      if (!pi[i].is_zero()) in_all = false;
    if (in_all) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> FiniteAlgebra::derivation_direction() const {
  if (!epsilon0_is_unit()) return std::nullopt;
  for (std::size_t i : radical_indices()) {
    bool clean = true;
    for (std::size_t j = 1; j < dim() && clean; ++j)
      for (std::size_t k = 1; k < dim() && clean; ++k)
        if (!mul_[j][k][i].is_zero()) clean = false;
    if (clean) return i;
  }
  return std::nullopt;
}

TensorElement tensor_zero(const FiniteAlgebra& B, const RingPtr& ring,
                          MonomialOrder order) {
  return {std::vector<RationalFunction>(B.dim(),
                                        RationalFunction::zero(ring, order))};
}

TensorElement tensor_scalar(const FiniteAlgebra& B, const RationalFunction& r) {
  TensorElement t = tensor_zero(B, r.ring(), r.order());
  for (std::size_t i = 0; i < B.dim(); ++i) {
    if (B.unit()[i].is_zero()) continue;
    t.comps[i] =
        r * RationalFunction::constant(r.ring(), B.unit()[i], r.order());
  }
  return t;
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
  TensorElement t = a;
  for (std::size_t i = 0; i < t.comps.size(); ++i)
    t.comps[i] = t.comps[i] + b.comps[i];
  return t;
}

TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) {
  TensorElement t = a;
  for (std::size_t i = 0; i < t.comps.size(); ++i)
    t.comps[i] = t.comps[i] - b.comps[i];
  return t;
}

TensorElement tensor_mul(const FiniteAlgebra& B, const TensorElement& a,
                         const TensorElement& b) {
  const RingPtr& ring = a.comps[0].ring();
  MonomialOrder order = a.comps[0].order();
  TensorElement t = tensor_zero(B, ring, order);
  for (std::size_t i = 0; i < B.dim(); ++i) {
    if (a.comps[i].is_zero()) continue;
    for (std::size_t j = 0; j < B.dim(); ++j) {
      if (b.comps[j].is_zero()) continue;
      RationalFunction prod = a.comps[i] * b.comps[j];
      for (std::size_t m = 0; m < B.dim(); ++m) {
        const Coeff& c = B.mul_row(i, j)[m];
        if (c.is_zero()) continue;
        t.comps[m] = t.comps[m] +
                     prod * RationalFunction::constant(ring, c, order);
      }
    }
  }
  return t;
}

TensorElement tensor_eval(const FiniteAlgebra& B, const Polynomial& p,
                          const std::vector<TensorElement>& images,
                          const RingPtr& ring, MonomialOrder order) {
  if (images.size() != p.ring()->arity())
    fail(ErrorKind::RingMismatch, "tensor image count mismatch");
  TensorElement acc = tensor_zero(B, ring, order);
  for (const auto& t : p.terms()) {
    TensorElement m = tensor_scalar(
        B, RationalFunction::constant(ring, t.coeff, order));
    for (std::size_t v = 0; v < images.size(); ++v)
      for (std::uint32_t e = 0; e < t.mono[v]; ++e)
        m = tensor_mul(B, m, images[v]);
    acc = tensor_add(acc, m);
  }
  return acc;
}

RationalFunction tensor_project(const FiniteAlgebra& B, std::size_t j,
                                const TensorElement& t) {
  const RingPtr& ring = t.comps[0].ring();
  MonomialOrder order = t.comps[0].order();
  RationalFunction acc = RationalFunction::zero(ring, order);
  for (std::size_t i = 0; i < B.dim(); ++i) {
    const Coeff& c = B.proj(j, i);
    if (c.is_zero() || t.comps[i].is_zero()) continue;
    acc = acc + t.comps[i] * RationalFunction::constant(ring, c, order);
  }
  return acc;
}

DRingStructure::DRingStructure(PRingPtr ring, AlgebraPtr algebra,
                               std::vector<TensorElement> e_images)
    : ring_(std::move(ring)), algebra_(std::move(algebra)),
      e_images_(std::move(e_images)) {
  if (algebra_->field() != ring_->field())
    fail(ErrorKind::RingMismatch, "algebra over a different field");
  if (e_images_.size() != ring_->arity())
    fail(ErrorKind::InvalidInput, "one e-image per ring variable required");
  for (std::size_t v = 0; v < e_images_.size(); ++v) {
    if (e_images_[v].comps.size() != algebra_->dim())
      fail(ErrorKind::InvalidInput, "e-image arity mismatch");
    for (const auto& c : e_images_[v].comps)
      if (*c.ring() != *ring_->poly_ring())
        fail(ErrorKind::RingMismatch, "e-image outside the ring");
    // pi_0-section identity on the variables
    RationalFunction xv = RationalFunction::variable(
        ring_->poly_ring(), v, ring_->order());
    if (e_images_[v].comps[0] != xv)
      fail(ErrorKind::NotWellDefined,
           "pi_0 component of e(" + ring_->poly_ring()->var_name(v) +
               ") must be the variable itself");
  }
  // ring homomorphism on the relations
  for (const auto& r : ring_->relations()) {
    TensorElement er = e_apply(r);
    for (const auto& c : er.comps)
      if (!ideal_contains(ring_->saturated_relations(), c.num()))
        fail(ErrorKind::NotWellDefined,
             "e does not annihilate the relation " + r.to_string());
  }
}

TensorElement DRingStructure::e_apply(const Polynomial& r) const {
  if (*r.ring() != *ring_->poly_ring())
    fail(ErrorKind::RingMismatch, "element outside the ring");
  return tensor_eval(*algebra_, r, e_images_, ring_->poly_ring(),
                     ring_->order());
}

std::vector<RationalFunction> DRingStructure::extract_operators(
    const Polynomial& r) const {
  TensorElement e = e_apply(r);
  return {e.comps.begin() + 1, e.comps.end()};
}

std::vector<RationalMap> DRingStructure::associated_endomorphisms() const {
  std::vector<RationalMap> out;
  for (std::size_t j = 0; j < algebra_->projection_count(); ++j) {
    std::vector<RationalFunction> images;
    for (std::size_t v = 0; v < ring_->arity(); ++v)
      images.push_back(tensor_project(*algebra_, j, e_images_[v]));
    out.push_back(RationalMap(ring_, ring_, images));  // enforces units
  }
  // sigma_0 is the identity
  for (std::size_t v = 0; v < ring_->arity(); ++v) {
    RationalFunction xv =
        RationalFunction::variable(ring_->poly_ring(), v, ring_->order());
    if (out[0].images()[v] != xv)
      fail(ErrorKind::NotWellDefined, "sigma_0 is not the identity");
  }
  return out;
}

std::optional<Derivation> DRingStructure::radical_derivation() const {
  auto dir = algebra_->derivation_direction();
  if (!dir) return std::nullopt;
  std::vector<RationalFunction> images;
  for (const auto& e : e_images_) images.push_back(e.comps[*dir]);
  return Derivation(ring_, images);
}

bool DRingStructure::is_d_constant(const RationalFunction& g) const {
  TensorElement en = e_apply(g.num());
  TensorElement ed = e_apply(g.den());
  TensorElement lhs = tensor_mul(*algebra_, en,
                                 tensor_scalar(*algebra_, RationalFunction(g.den())));
  TensorElement rhs = tensor_mul(*algebra_, ed,
                                 tensor_scalar(*algebra_, RationalFunction(g.num())));
  return lhs == rhs;
}

bool totally_invariant_by_operators(const DRingStructure& D, const Ideal& I) {
  if (*I.ring() != *D.ring()->poly_ring())
    fail(ErrorKind::RingMismatch, "ideal outside the ring");
  Ideal sat = D.ring()->chart_ideal(I.generators());
  // operator components stay in I
  for (const auto& gen : I.generators()) {
    for (const auto& op : D.extract_operators(gen)) {
      if (op.is_zero()) continue;
      if (!D.ring()->unit_in_localization(op.den()))
        fail(ErrorKind::InvalidInput,
             "operator image leaves the localized ring");
      if (!ideal_contains(sat, op.num())) return false;
    }
  }
  // associated endomorphisms map I onto I
  std::vector<RationalMap> sigmas = D.associated_endomorphisms();
  for (std::size_t j = 1; j < sigmas.size(); ++j) {
    std::vector<Polynomial> image_gens;
    for (const auto& gen : I.generators()) {
      RationalFunction s = substitute(gen, sigmas[j].images());
      image_gens.push_back(s.num());
    }
    if (!ideal_equal(D.ring()->chart_ideal(image_gens), sat)) return false;
  }
  return true;
}

namespace {

struct TensorPresentation {
  PRingPtr zring;
  std::vector<std::size_t> xmap;           // R variable -> Z index
  std::vector<std::size_t> zmap;           // basis index 1..l -> Z index
  std::vector<Polynomial> basis_lift;      // eps_m as a polynomial on Z
};

TensorPresentation present_tensor_ring(const DRingStructure& D) {
  D.ring()->require_ufd("the tensor-ring presentation");
  const FiniteAlgebra& B = *D.algebra();
  const RingPtr& R = D.ring()->poly_ring();
  std::size_t n = R->arity(), l = B.dim() - 1;

  std::vector<std::string> names = R->var_names();
  TensorPresentation pres;
  pres.xmap.resize(n);
  for (std::size_t i = 0; i < n; ++i) pres.xmap[i] = i;
  for (std::size_t m = 1; m <= l; ++m) {
    std::string nm = B.labels()[m];
    while (std::find(names.begin(), names.end(), nm) != names.end())
      nm += "_";
    pres.zmap.push_back(names.size());
    names.push_back(nm);
  }
  RingPtr zpoly = make_poly_ring(R->field(), names);

  // eps_0 = 1 - sum_{i>=1} u_i z_i (u_0 = 1 by the pi_0 normalization);
  // eps_m = z_m for m >= 1
  Polynomial eps0 = Polynomial::constant(zpoly, 1);
  for (std::size_t m = 1; m <= l; ++m) {
    if (B.unit()[m].is_zero()) continue;
    eps0 = eps0 - Polynomial::variable(zpoly, pres.zmap[m - 1])
                      .scaled(B.unit()[m]);
  }
  pres.basis_lift.push_back(eps0);
  for (std::size_t m = 1; m <= l; ++m)
    pres.basis_lift.push_back(Polynomial::variable(zpoly, pres.zmap[m - 1]));

  auto lift_vec = [&](const std::vector<Coeff>& w) {
    Polynomial acc = Polynomial::zero(zpoly);
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (w[m].is_zero()) continue;
      acc = acc + pres.basis_lift[m].scaled(w[m]);
    }
    return acc;
  };

  std::vector<Polynomial> relations;
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i; j <= l; ++j)
      relations.push_back(pres.basis_lift[i] * pres.basis_lift[j] -
                          lift_vec(B.mul_row(i, j)));

  std::vector<Polynomial> inverted;
  for (const auto& f : D.ring()->inverted())
    inverted.push_back(map_vars(f, zpoly, pres.xmap, MonomialOrder::grevlex()));

  pres.zring = make_ring(R->field(), names, relations, inverted);
  return pres;
}

// e(p) as a rational function on the presented tensor ring
RationalFunction lift_tensor(const TensorPresentation& pres,
                             const TensorElement& t) {
  const RingPtr& Z = pres.zring->poly_ring();
  MonomialOrder order = pres.zring->order();
  RationalFunction acc = RationalFunction::zero(Z, order);
  for (std::size_t m = 0; m < t.comps.size(); ++m) {
    if (t.comps[m].is_zero()) continue;
    RationalFunction comp(
        map_vars(t.comps[m].num(), Z, pres.xmap, order),
        map_vars(t.comps[m].den(), Z, pres.xmap, order));
    acc = acc + comp * RationalFunction(pres.basis_lift[m].with_order(order));
  }
  return acc;
}

}  // namespace

bool totally_invariant_by_extension(const DRingStructure& D, const Ideal& I) {
  if (*I.ring() != *D.ring()->poly_ring())
    fail(ErrorKind::RingMismatch, "ideal outside the ring");
  TensorPresentation pres = present_tensor_ring(D);
  std::vector<Polynomial> plain, image;
  for (const auto& gen : I.generators()) {
    plain.push_back(map_vars(gen, pres.zring->poly_ring(), pres.xmap,
                             pres.zring->order()));
    RationalFunction eg = lift_tensor(pres, D.e_apply(gen));
    if (!pres.zring->unit_in_localization(eg.den()))
      fail(ErrorKind::InvalidInput, "e-image leaves the localized ring");
    image.push_back(eg.num());
  }
  return ideal_equal(pres.zring->chart_ideal(image),
                     pres.zring->chart_ideal(plain));
}

Correspondence build_correspondence(const DRingStructure& D) {
  TensorPresentation pres = present_tensor_ring(D);
  std::vector<RationalFunction> phi1_images, phi2_images;
  for (std::size_t v = 0; v < D.ring()->arity(); ++v) {
    phi1_images.push_back(lift_tensor(pres, D.e_images()[v]));
    phi2_images.push_back(RationalFunction::variable(
        pres.zring->poly_ring(), pres.xmap[v], pres.zring->order()));
  }
  return {pres.zring, RationalMap(pres.zring, D.ring(), phi1_images),
          RationalMap(pres.zring, D.ring(), phi2_images)};
}

TensorElement apply_tensor_map(const TensorMap& f, const Polynomial& u) {
  if (*u.ring() != *f.source->poly_ring())
    fail(ErrorKind::RingMismatch, "element outside the map's source");
  return tensor_eval(*f.algebra, u, f.images, f.base->poly_ring(),
                     f.base->order());
}

Derivation dual_numbers_derivation(const TensorMap& f1, const TensorMap& f2) {
  if (f1.algebra->dim() != 2 || f2.algebra->dim() != 2 ||
      !f1.algebra->epsilon0_is_unit() ||
      !f1.algebra->mul_row(1, 1)[0].is_zero() ||
      !f1.algebra->mul_row(1, 1)[1].is_zero())
    fail(ErrorKind::Unsupported,
         "derivation extraction requires the dual-numbers algebra");
  if (!f1.source->same_chart(*f2.source) || !f1.base->same_chart(*f2.base))
    fail(ErrorKind::RingMismatch, "maps have different charts");
  if (f1.images.size() != f1.source->arity() ||
      f2.images.size() != f1.source->arity())
    fail(ErrorKind::InvalidInput, "one image per source variable required");
  if (!f1.source->same_chart(*f1.base))
    fail(ErrorKind::Unsupported,
         "derivation extraction needs maps into the source's own "
         "dual-numbers extension");
  std::vector<RationalFunction> images;
  for (std::size_t v = 0; v < f1.source->arity(); ++v) {
    if (f1.images[v].comps[0] != f2.images[v].comps[0])
      fail(ErrorKind::HypothesisViolation,
           "maps do not agree modulo the nilpotent");
    RationalFunction xv = RationalFunction::variable(
        f1.source->poly_ring(), v, f1.source->order());
    if (f1.images[v].comps[0] != xv)
      fail(ErrorKind::Unsupported,
           "shared base map must be the identity of the source chart");
    images.push_back(f1.images[v].comps[1] - f2.images[v].comps[1]);
  }
  return Derivation(f1.source, images);
}

TensorMap derivation_to_tensor_map(const Derivation& d) {
  auto algebra = std::make_shared<const FiniteAlgebra>(
      FiniteAlgebra::dual_numbers(d.ring()->field()));
  std::vector<TensorElement> images;
  for (std::size_t v = 0; v < d.ring()->arity(); ++v) {
    TensorElement t = tensor_zero(*algebra, d.ring()->poly_ring(),
                                  d.ring()->order());
    t.comps[0] = RationalFunction::variable(d.ring()->poly_ring(), v,
                                            d.ring()->order());
    t.comps[1] = d.images()[v];
    images.push_back(t);
  }
  return {d.ring(), d.ring(), algebra, images};
}

}  // namespace invkit
