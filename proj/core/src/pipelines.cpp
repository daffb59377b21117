#include "invkit/pipelines.hpp"

#include <algorithm>

#include "invkit/polynomial_gcd.hpp"

namespace invkit {

DynamicalSystem::DynamicalSystem(RationalMap map) : map_(std::move(map)) {
  if (!map_.is_self_map())
    fail(ErrorKind::InvalidInput, "dynamical system needs a self-map");
  if (!dominance_check(map_))
    fail(ErrorKind::InvalidInput, "self-map is not dominant");
}

SelfCorrespondence::SelfCorrespondence(PRingPtr xring, PRingPtr graph,
                                       RationalMap proj1, RationalMap proj2,
                                       bool finite_asserted)
    : xring_(std::move(xring)),
      graph_(std::move(graph)),
      proj1_(std::move(proj1)),
      proj2_(std::move(proj2)),
      finite_asserted_(finite_asserted) {
  if (!proj1_.source()->same_chart(*graph_) ||
      !proj2_.source()->same_chart(*graph_) ||
      !proj1_.target()->same_chart(*xring_) ||
      !proj2_.target()->same_chart(*xring_))
    fail(ErrorKind::RingMismatch, "projections do not fit the charts");
  if (!dominance_check(proj1_) || !dominance_check(proj2_))
    fail(ErrorKind::InvalidInput, "both projections must be dominant");
}

SelfCorrespondence SelfCorrespondence::from_graph(const DynamicalSystem& sys) {
  const PRingPtr& X = sys.ring();
  std::size_t n = X->arity();
  std::vector<std::string> names = X->poly_ring()->var_names();
  for (std::size_t i = 0; i < n; ++i) {
    std::string nm = X->poly_ring()->var_name(i) + "_im";
    while (std::find(names.begin(), names.end(), nm) != names.end())
      nm += "_";
    names.push_back(nm);
  }
  RingPtr big = make_poly_ring(X->field(), names);
  std::vector<std::size_t> first(n), second(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = i;
    second[i] = n + i;
  }
  MonomialOrder order = MonomialOrder::grevlex();

  // graph locus: den_i(x) * y_i - num_i(x), localized at the denominators
  std::vector<Polynomial> relations, inverted;
  for (std::size_t i = 0; i < n; ++i) {
    const RationalFunction& im = sys.map().images()[i];
    Polynomial num = map_vars(im.num(), big, first, order);
    Polynomial den = map_vars(im.den(), big, first, order);
    relations.push_back(den * Polynomial::variable(big, second[i], order) -
                        num);
    if (!den.is_constant()) inverted.push_back(den);
  }
  for (const auto& f : X->inverted()) {
    inverted.push_back(map_vars(f, big, first, order));
    inverted.push_back(map_vars(f, big, second, order));
  }
  PRingPtr graph = make_ring(X->field(), names, relations, inverted);

  std::vector<RationalFunction> p1, p2;
  for (std::size_t i = 0; i < n; ++i) {
    p1.push_back(RationalFunction(Polynomial::variable(big, first[i], order)));
    p2.push_back(RationalFunction(Polynomial::variable(big, second[i], order)));
  }
  return SelfCorrespondence(X, graph, RationalMap(graph, X, p1),
                            RationalMap(graph, X, p2), true);
}

bool totally_invariant_check(const DynamicalSystem& sys, const Hypersurface& H,
                             std::span<const Polynomial> hints) {
  Hypersurface t = proper_transform(sys.map(), H, hints);
  return same_factor_sets(t, H);
}

bool correspondence_invariant_check(const SelfCorrespondence& corr,
                                    const Hypersurface& H,
                                    std::span<const Polynomial> hints) {
  Hypersurface t1 = proper_transform(corr.proj1(), H, hints);
  Hypersurface t2 = proper_transform(corr.proj2(), H, hints);
  return same_factor_sets(t1, t2);
}

namespace {

InvariantCertificate integral_to_certificate(const FirstIntegral& fi,
                                             bool agreement_verified) {
  return InvariantCertificate{fi.g, {}, {}, {}, fi.exponents,
                              agreement_verified, !fi.g.is_constant()};
}

std::vector<RationalFunction> witness_factor_functions(
    const std::vector<Hypersurface>& witnesses) {
  std::vector<RationalFunction> out;
  for (const auto& w : witnesses)
    for (const auto& f : w.factors()) out.push_back(RationalFunction(f.poly));
  return out;
}

const char* kIndependenceAssumption =
    "multiplicative independence is decided modulo the base field's "
    "nonzero constants, not modulo its algebraic closure";
const char* kIrreducibilityAssumption =
    "witness factors marked irreducible are user assertions; they are not "
    "verified";

}  // namespace

SearchOutcome search_map_invariant(const DynamicalSystem& sys,
                                   const std::vector<Hypersurface>& witnesses) {
  SearchOutcome out{SearchStatus::None, std::nullopt, {}, {}};
  out.assumptions.push_back(kIrreducibilityAssumption);
  out.assumptions.push_back(kIndependenceAssumption);

  // positive characteristic needs geometrically reduced generic fibres
  if (sys.ring()->field().is_prime_field() &&
      !separability_check(sys.map())) {
    out.status = SearchStatus::Refused;
    out.diagnostics.push_back(
        "separability hypothesis fails: the Jacobian of the self-map is "
        "rank-deficient, so generic fibres are not geometrically reduced");
    return out;
  }

  std::vector<Hypersurface> survivors;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (totally_invariant_check(sys, witnesses[i])) {
      survivors.push_back(witnesses[i]);
    } else {
      out.diagnostics.push_back("witness " + std::to_string(i) +
                                " is not totally invariant; pruned");
    }
  }
  if (survivors.empty()) {
    out.diagnostics.push_back("no witnesses survive the invariance check");
    return out;
  }

  InvariantSearchResult r = find_invariant_function(
      sys.map(), RationalMap::identity(sys.ring()), survivors);
  out.diagnostics.insert(out.diagnostics.end(), r.diagnostics.begin(),
                         r.diagnostics.end());
  if (r.certificate) {
    out.status = SearchStatus::Found;
    out.certificate = std::move(r.certificate);
  }
  return out;
}

SearchOutcome search_first_integral(const Derivation& d,
                                    const std::vector<Hypersurface>& witnesses) {
  SearchOutcome out{SearchStatus::None, std::nullopt, {}, {}};
  out.assumptions.push_back(kIrreducibilityAssumption);
  out.assumptions.push_back(kIndependenceAssumption);

  // make the derivation ring-stable by enlarging the chart if needed
  Derivation delta = d;
  if (!delta.is_ring_stable()) {
    PRingPtr closed = ring_closure_for_derivation(d);
    std::vector<RationalFunction> images = d.images();
    delta = Derivation(closed, images);
    out.diagnostics.push_back(
        "chart enlarged to make the derivation ring-stable (inverted the "
        "image denominators)");
  }

  // stability hypothesis per witness factor: δ(a) ∈ (a)
  bool refused = false;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    for (const auto& f : witnesses[i].factors()) {
      Ideal principal(delta.ring()->poly_ring(), {f.poly});
      if (!is_d_ideal(delta, principal)) {
        out.diagnostics.push_back(
            "witness " + std::to_string(i) + " factor " + f.poly.to_string() +
            " violates the stability condition (its image leaves the "
            "principal ideal)");
        refused = true;
      }
    }
  }
  if (refused) {
    out.status = SearchStatus::Refused;
    return out;
  }
  if (witnesses.empty()) {
    out.diagnostics.push_back("no witnesses supplied");
    return out;
  }

  auto fi = first_integral_search(delta, witness_factor_functions(witnesses));
  if (!fi) {
    out.diagnostics.push_back(
        "log-derivative kernel has no nonconstant element; add witnesses");
    return out;
  }
  bool verified = delta.apply(fi->g).is_zero();
  if (!verified)
    fail(ErrorKind::InvalidInput,
         "internal: integral candidate failed exact re-verification");
  out.status = SearchStatus::Found;
  out.certificate = integral_to_certificate(*fi, verified);
  return out;
}

SearchOutcome search_dring_invariant(const DRingStructure& D,
                                     const std::vector<Hypersurface>& witnesses) {
  SearchOutcome out{SearchStatus::None, std::nullopt, {}, {}};
  out.assumptions.push_back(kIrreducibilityAssumption);
  out.assumptions.push_back(kIndependenceAssumption);
  out.assumptions.push_back(
      "injectivity of the associated endomorphisms is a user assertion");
  out.assumptions.push_back(
      "semisimple directions are handled per endomorphism and re-verified "
      "on the full structure, not through a single joint correspondence");

  // hypothesis: witnesses are totally invariant in the extension sense
  bool refused = false;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (witnesses[i].is_empty())
      fail(ErrorKind::InvalidInput, "empty hypersurface as witness");
    Ideal principal(D.ring()->poly_ring(), {witnesses[i].product_poly()});
    if (!totally_invariant_by_extension(D, principal)) {
      out.diagnostics.push_back("witness " + std::to_string(i) +
                                " fails the extension-ideal invariance "
                                "criterion");
      refused = true;
    }
  }
  if (refused) {
    out.status = SearchStatus::Refused;
    return out;
  }
  if (witnesses.empty()) {
    out.diagnostics.push_back("no witnesses supplied");
    return out;
  }

  std::optional<RationalFunction> candidate;
  std::optional<InvariantCertificate> cert;
  bool has_radical = !D.algebra()->radical_indices().empty();
  if (has_radical || D.algebra()->projection_count() == 1) {
    std::optional<Derivation> delta = D.radical_derivation();
    if (!delta && has_radical)
      fail(ErrorKind::Unsupported,
           "no derivation direction in the radical (quadratic feedback in "
           "the chosen basis)");
    if (!delta) delta = Derivation::zero(D.ring());
    auto fi =
        first_integral_search(*delta, witness_factor_functions(witnesses));
    if (fi) {
      candidate = fi->g;
      cert = integral_to_certificate(*fi, false);
      out.diagnostics.push_back("candidate from the radical direction");
    }
  } else {
    std::vector<RationalMap> sigmas = D.associated_endomorphisms();
    InvariantSearchResult r = find_invariant_function(
        sigmas[1], RationalMap::identity(D.ring()), witnesses);
    out.diagnostics.insert(out.diagnostics.end(), r.diagnostics.begin(),
                           r.diagnostics.end());
    if (r.certificate) {
      candidate = r.certificate->g;
      cert = std::move(r.certificate);
      out.diagnostics.push_back("candidate from the first endomorphism");
    }
  }
  if (!candidate) {
    out.diagnostics.push_back("no candidate from the component searches");
    return out;
  }

  // final verification on the full structure: e(g) = g ⊗ 1
  if (!D.is_d_constant(*candidate)) {
    out.diagnostics.push_back(
        "component candidate is not constant for the full structure");
    return out;
  }
  cert->verified_agreement = true;
  cert->verified_nonconstant = !candidate->is_constant();
  out.status = SearchStatus::Found;
  out.certificate = std::move(cert);
  return out;
}

std::vector<Hypersurface> level_sets(const RationalFunction& g,
                                     const std::vector<Coeff>& constants,
                                     const PRingPtr& ring,
                                     std::vector<std::string>* skipped) {
  if (*g.ring() != *ring->poly_ring())
    fail(ErrorKind::RingMismatch, "function outside the chart");
  if (g.is_constant())
    fail(ErrorKind::InvalidInput, "level sets of a constant function");
  std::vector<Hypersurface> out;
  std::vector<Polynomial> hints{g.num(), g.den()};
  for (const auto& c : constants) {
    Polynomial h =
        g.num() - g.den().scaled(c);
    if (h.is_zero() || h.is_constant()) {
      if (skipped)
        skipped->push_back("level " + c.to_string() +
                           " degenerates to a constant polynomial; skipped");
      continue;
    }
    std::vector<HFactor> kept;
    for (const auto& sf : factor_split(h, hints)) {
      if (ring->unit_in_localization(sf.poly)) continue;
      if (ring->has_relations() && ring->empty_on_chart(sf.poly)) continue;
      kept.push_back({sf.poly, sf.irreducible});
    }
    if (kept.empty()) {
      if (skipped)
        skipped->push_back("level " + c.to_string() +
                           " is empty on the chart; skipped");
      continue;
    }
    out.push_back(Hypersurface(ring, std::move(kept)));
  }
  return out;
}

FrobeniusReport frobenius_demo(std::uint32_t p) {
  CoeffField f = CoeffField::prime_field(p);
  PRingPtr line = make_ring(f, {"x"});
  Polynomial x = Polynomial::variable(line->poly_ring(), 0, line->order());
  RationalMap frob(line, line,
                   {RationalFunction(x.pow(p))});
  DynamicalSystem sys(frob);

  FrobeniusReport report{p, {}, true, SearchStatus::None, {}};
  std::vector<Hypersurface> witnesses;
  for (std::uint32_t c = 0; c < p; ++c) {
    Polynomial lin = x - Polynomial::constant(line->poly_ring(),
                                              static_cast<long>(c),
                                              line->order());
    Hypersurface H(line, {{lin, true}});
    Ideal scheme = scheme_inverse_image(frob, H);
    BasisPtr basis = scheme.basis(MonomialOrder::grevlex());
    if (basis->size() != 1)
      fail(ErrorKind::InvalidInput, "internal: pullback not principal");
    Polynomial gen = (*basis)[0];
    auto support = divisor_support(RationalFunction(gen), *line,
                                   std::vector<Polynomial>{lin});
    Hypersurface transform = proper_transform(frob, H);
    bool radical = radical_part(gen) == gen.monic();
    report.points.push_back(
        {Coeff::residue(static_cast<long>(c), p), support.first, transform,
         radical});
    witnesses.push_back(H);
  }
  report.separable = separability_check(frob);
  SearchOutcome search = search_map_invariant(sys, witnesses);
  report.search_status = search.status;
  report.diagnostics = search.diagnostics;
  return report;
}

}  // namespace invkit
