#include <algorithm>

#include "invkit/polynomial_gcd.hpp"
#include "invkit/rational_map.hpp"

namespace invkit {

namespace {

// pullback of the product generator of H; the numerator generates the
// scheme-theoretic preimage on the source chart
RationalFunction pullback_generator(const RationalMap& map,
                                    const Hypersurface& H) {
  if (!H.ring()->same_chart(*map.target()))
    fail(ErrorKind::RingMismatch, "hypersurface is not on the target chart");
  if (H.is_empty())
    fail(ErrorKind::InvalidInput, "empty hypersurface has no generator");
  Polynomial h = H.product_poly();
  return substitute(RationalFunction(h), map.images());
}

// combined ring source-vars ++ target-vars (target names deduplicated)
struct GraphRing {
  RingPtr ring;
  std::vector<std::size_t> src_map;  // source var -> combined index
  std::vector<std::size_t> tgt_map;  // target var -> combined index
  MonomialOrder block;               // eliminates the source block
};

GraphRing graph_ring(const RationalMap& map) {
  const RingPtr& src = map.source()->poly_ring();
  const RingPtr& tgt = map.target()->poly_ring();
  std::vector<std::string> names = src->var_names();
  GraphRing g;
  g.src_map.resize(src->arity());
  for (std::size_t i = 0; i < src->arity(); ++i) g.src_map[i] = i;
  for (std::size_t j = 0; j < tgt->arity(); ++j) {
    std::string n = tgt->var_name(j);
    while (std::find(names.begin(), names.end(), n) != names.end())
      n += "_im";
    g.tgt_map.push_back(names.size());
    names.push_back(n);
  }
  g.ring = make_poly_ring(src->field(), names);
  g.block = MonomialOrder::block(static_cast<std::uint32_t>(src->arity()));
  return g;
}

Polynomial radicalize_if_principal(const Ideal& I, Polynomial* out_gen) {
  BasisPtr b = I.basis(MonomialOrder::grevlex());
  if (b->size() == 1) {
    *out_gen = (*b)[0];
    return radical_part((*b)[0]);
  }
  return Polynomial::zero(I.ring());
}

}  // namespace

Ideal scheme_inverse_image(const RationalMap& map, const Hypersurface& H) {
  RationalFunction pulled = pullback_generator(map, H);
  const PresentedRing& src = *map.source();
  if (pulled.num().is_zero() ||
      ideal_contains(src.saturated_relations(), pulled.num()))
    fail(ErrorKind::InvalidInput,
         "hypersurface pulls back to zero (it contains the image closure)");
  return src.chart_ideal({pulled.num()});
}

Hypersurface set_inverse_closure(const RationalMap& map, const Hypersurface& H,
                                 std::span<const Polynomial> hints) {
  RationalFunction pulled = pullback_generator(map, H);
  const PRingPtr& src = map.source();
  if (pulled.num().is_zero() ||
      ideal_contains(src->saturated_relations(), pulled.num()))
    fail(ErrorKind::InvalidInput,
         "hypersurface pulls back to zero (it contains the image closure)");

  // per-factor pullback numerators split the product for free
  std::vector<Polynomial> auto_hints;
  for (const auto& f : H.factors()) {
    RationalFunction pf = substitute(RationalFunction(f.poly), map.images());
    if (!pf.num().is_constant()) auto_hints.push_back(pf.num());
  }
  for (const auto& h : hints) auto_hints.push_back(h);

  std::vector<HFactor> kept;
  for (const auto& sf : factor_split(pulled.num(), auto_hints)) {
    if (src->unit_in_localization(sf.poly)) continue;
    if (src->has_relations() && src->empty_on_chart(sf.poly)) continue;
    kept.push_back({sf.poly, sf.irreducible});
  }
  return Hypersurface(src, std::move(kept));
}

Ideal image_closure(const RationalMap& map, const Ideal& C) {
  if (*C.ring() != *map.source()->poly_ring())
    fail(ErrorKind::RingMismatch, "ideal outside the source ring");
  GraphRing g = graph_ring(map);
  const PresentedRing& src = *map.source();
  const PresentedRing& tgt = *map.target();

  std::vector<Polynomial> gens;
  for (const auto& p : src.relations())
    gens.push_back(map_vars(p, g.ring, g.src_map, g.block));
  for (const auto& p : C.generators())
    gens.push_back(map_vars(p, g.ring, g.src_map, g.block));
  Polynomial multiplier =
      map_vars(src.inverted_product(), g.ring, g.src_map, g.block);
  for (std::size_t j = 0; j < tgt.arity(); ++j) {
    const RationalFunction& im = map.images()[j];
    Polynomial num = map_vars(im.num(), g.ring, g.src_map, g.block);
    Polynomial den = map_vars(im.den(), g.ring, g.src_map, g.block);
    Polynomial yj = Polynomial::variable(g.ring, g.tgt_map[j], g.block);
    gens.push_back(den * yj - num);
    multiplier = multiplier * den;
  }

  Ideal graph(g.ring, gens);
  if (!multiplier.is_constant()) graph = saturation(graph, multiplier);

  std::vector<bool> keep(g.ring->arity(), false);
  for (std::size_t j : g.tgt_map) keep[j] = true;
  Ideal eliminated = elimination_ideal(graph, keep);

  std::vector<Polynomial> out;
  for (const auto& p : eliminated.generators())
    out.push_back(
        project_vars(p, tgt.poly_ring(), g.tgt_map, tgt.order()));
  return tgt.chart_ideal(out);
}

Hypersurface proper_transform(const RationalMap& map, const Hypersurface& H,
                              std::span<const Polynomial> hints) {
  Hypersurface closure = set_inverse_closure(map, H, hints);
  for (const auto& f : closure.factors())
    if (!f.irreducible)
      fail(ErrorKind::FactorizationIncomplete,
           "set-inverse closure factor lacks an irreducibility assertion: " +
               f.poly.to_string());

  const PresentedRing& tgt = *map.target();
  std::vector<Ideal> component_ideals;
  for (const auto& h : H.factors())
    component_ideals.push_back(tgt.chart_ideal({h.poly}));

  std::vector<HFactor> kept;
  for (const auto& f : closure.factors()) {
    Ideal J = image_closure(map, Ideal(map.source()->poly_ring(), {f.poly}));
    // radical normalization for principal images
    Polynomial gen = Polynomial::zero(J.ring());
    Polynomial rad = radicalize_if_principal(J, &gen);
    Ideal Jrad = rad.is_zero() || rad == gen
                     ? J
                     : tgt.chart_ideal({rad});
    for (const auto& comp : component_ideals) {
      if (ideal_equal(Jrad, comp)) {
        kept.push_back(f);
        break;
      }
    }
  }
  return Hypersurface(map.source(), std::move(kept));
}

PullbackComparison compare_pullbacks(const RationalMap& map,
                                     const Hypersurface& H,
                                     std::span<const Polynomial> hints) {
  Ideal scheme = scheme_inverse_image(map, H);
  Hypersurface proper = proper_transform(map, H, hints);
  bool agree = ideal_equal(scheme, proper.vanishing_ideal());
  bool radical;
  BasisPtr b = scheme.basis(MonomialOrder::grevlex());
  if (b->size() == 1) {
    radical = radical_part((*b)[0]) == (*b)[0].monic();
  } else if (agree) {
    radical = true;  // equals the radical ideal of the proper transform
  } else {
    fail(ErrorKind::Unsupported,
         "radicality undecided for a non-principal scheme pullback");
  }
  return {scheme, proper, radical, agree};
}

bool dominance_check(const RationalMap& map) {
  Ideal img = image_closure(
      map, Ideal(map.source()->poly_ring(), map.source()->relations()));
  return ideal_equal(img, map.target()->chart_ideal({}));
}

bool separability_check(const RationalMap& map) {
  if (map.target()->has_relations())
    fail(ErrorKind::InvalidInput,
         "separability check requires a target chart with zero relations");
  if (!dominance_check(map))
    fail(ErrorKind::InvalidInput, "separability check requires a dominant map");
  std::size_t rows = map.target()->arity();
  std::size_t cols = map.source()->arity();
  std::vector<std::vector<RationalFunction>> jac(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      jac[r].push_back(map.images()[r].derivative(c));

  // exact Gaussian elimination over the fraction field
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && jac[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(jac[rank], jac[sel]);
    RationalFunction inv = jac[rank][col].inverse();
    for (std::size_t c = col; c < cols; ++c)
      jac[rank][c] = jac[rank][c] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || jac[r][col].is_zero()) continue;
      RationalFunction f = jac[r][col];
      for (std::size_t c = col; c < cols; ++c)
        jac[r][c] = jac[r][c] - f * jac[rank][c];
    }
    ++rank;
  }
  return rank == rows;
}

std::pair<EffectiveDivisor, EffectiveDivisor> divisor_support(
    const RationalFunction& g, const PresentedRing& ring,
    std::span<const Polynomial> factor_hints) {
  ring.require_ufd("divisor support");
  if (*g.ring() != *ring.poly_ring())
    fail(ErrorKind::RingMismatch, "function outside the ring");
  if (g.is_zero()) fail(ErrorKind::InvalidInput, "divisor of zero");

  for (std::size_t i = 0; i < factor_hints.size(); ++i) {
    const Polynomial& h = factor_hints[i];
    if (h.is_constant())
      fail(ErrorKind::InvalidInput, "constant factor hint");
    if (radical_part(h) != h.monic())
      fail(ErrorKind::InvalidInput,
           "factor hint is not squarefree: " + h.to_string());
    for (std::size_t j = i + 1; j < factor_hints.size(); ++j)
      if (!poly_gcd(h, factor_hints[j]).is_constant())
        fail(ErrorKind::InvalidInput, "factor hints are not pairwise coprime");
  }

  auto decompose = [&](const Polynomial& p) {
    EffectiveDivisor d;
    Polynomial rest = p;
    for (const auto& h : factor_hints) {
      Polynomial hh = h.with_order(rest.order()).monic();
      std::uint32_t m = 0;
      while (true) {
        auto q = exact_quotient(rest, hh);
        if (!q) break;
        rest = *q;
        ++m;
      }
      if (m > 0) d.terms.push_back({hh, m});
    }
    if (!rest.is_constant())
      fail(ErrorKind::InvalidInput,
           "factor hints insufficient: residual cofactor " + rest.to_string());
    return d;
  };
  return {decompose(g.num()), decompose(g.den())};
}

}  // namespace invkit
