#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

PRingPtr qplane() { return make_ring(CoeffField::rationals(), {"x", "y"}); }

Hypersurface hs(const PRingPtr& ring, std::vector<std::string> factors) {
  return Hypersurface::from_strings(ring, factors,
                                    std::vector<bool>(factors.size(), true));
}

DynamicalSystem vertical_square(const PRingPtr& P) {
  return DynamicalSystem(
      RationalMap(P, P, {rf("x", "1", P), rf("y^2", "1", P)}));
}

}  // namespace

TEST_CASE("dynamical system construction") {
  auto P = qplane();
  CHECK_THROWS_AS(DynamicalSystem(RationalMap(
                      P, P, {rf("x", "1", P), rf("x", "1", P)})),
                  Error);
  DynamicalSystem ok = vertical_square(P);
  CHECK(ok.ring()->same_chart(*P));
}

TEST_CASE("total invariance of hypersurfaces") {
  auto P = qplane();
  DynamicalSystem sys = vertical_square(P);
  CHECK(totally_invariant_check(sys, hs(P, {"x-3"})));
  // V(y-1) pulls back to V(y^2-1) which has the extra component y+1
  CHECK_FALSE(totally_invariant_check(sys, hs(P, {"y-1"})));
  DynamicalSystem id(RationalMap::identity(P));
  CHECK(totally_invariant_check(id, hs(P, {"x-3"})));
  CHECK(totally_invariant_check(id, hs(P, {"y-1", "x"})));
}

TEST_CASE("correspondence checks agree with the direct ones on graphs") {
  auto P = qplane();
  DynamicalSystem sys = vertical_square(P);
  SelfCorrespondence graph = SelfCorrespondence::from_graph(sys);
  for (const char* h : {"x-3", "y-1", "x"}) {
    CHECK(correspondence_invariant_check(graph, hs(P, {h})) ==
          totally_invariant_check(sys, hs(P, {h})));
  }
}

TEST_CASE("graph consistency on random systems") {
  auto P = qplane();
  std::mt19937_64 rng(191);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 100; ++trial) {
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 2);
    Polynomial q = planted_fiber_poly(rng, P->poly_ring(), k);
    RationalMap phi(P, P, {rf("x", "1", P), RationalFunction(q)});
    DynamicalSystem sys(phi);
    SelfCorrespondence graph = SelfCorrespondence::from_graph(sys);
    long c = static_cast<long>(rng() % 7);
    Hypersurface H(
        P, {{P->parse("x") - Polynomial::constant(P->poly_ring(), c), true}});
    REQUIRE(correspondence_invariant_check(graph, H) ==
            totally_invariant_check(sys, H));
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("diagonal correspondence preserves everything") {
  auto P = qplane();
  DynamicalSystem id(RationalMap::identity(P));
  SelfCorrespondence diag = SelfCorrespondence::from_graph(id);
  CHECK(correspondence_invariant_check(diag, hs(P, {"x"})));
  CHECK(correspondence_invariant_check(diag, hs(P, {"y-1", "x-2"})));
}

TEST_CASE("inversion correspondence is chart-sensitive") {
  // Gamma = V(u*v - 1) on the doubled line: the correspondence x <-> 1/x.
  // V(x) has empty preimage on the chart, so its transforms are empty and
  // the invariance check is vacuously true there; V(x-1) is genuinely
  // invariant; V(x-2) maps to V(x-1/2) and fails.
  auto L = make_ring(CoeffField::rationals(), {"x"});
  auto G = make_ring_parsed(CoeffField::rationals(), {"u", "v"}, {"u*v-1"},
                            {});
  RationalMap p1(G, L, {rf("u", "1", G)});
  RationalMap p2(G, L, {rf("v", "1", G)});
  SelfCorrespondence corr(L, G, p1, p2, true);
  Hypersurface origin = hs(L, {"x"});
  Hypersurface t1 = proper_transform(p1, origin);
  CHECK(t1.is_empty());
  CHECK(correspondence_invariant_check(corr, origin));
  CHECK(correspondence_invariant_check(corr, hs(L, {"x-1"})));
  CHECK_FALSE(correspondence_invariant_check(corr, hs(L, {"x-2"})));
}

TEST_CASE("map-invariant search on the planted system") {
  auto P = qplane();
  DynamicalSystem sys(
      RationalMap(P, P, {rf("x", "1", P), rf("y^2+x", "1", P)}));
  SearchOutcome out = search_map_invariant(
      sys, {hs(P, {"x-1"}), hs(P, {"x-2"}), hs(P, {"x-3"})});
  REQUIRE(out.status == SearchStatus::Found);
  REQUIRE(out.certificate.has_value());
  RationalFunction g = out.certificate->g;
  CHECK(pullback_function(sys.map(), g) == g);
  CHECK_FALSE(g.is_constant());
  CHECK_FALSE(out.assumptions.empty());
}

TEST_CASE("map-invariant search: identity and vacuous cases") {
  auto P = qplane();
  DynamicalSystem id(RationalMap::identity(P));
  SearchOutcome out = search_map_invariant(id, {hs(P, {"x"})});
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.certificate->g == rf("x", "1", P));

  // x -> x+1 has no invariant hypersurface among the candidates
  auto L = make_ring(CoeffField::rationals(), {"x"});
  DynamicalSystem shift(RationalMap(L, L, {rf("x+1", "1", L)}));
  SearchOutcome none = search_map_invariant(
      shift, {hs(L, {"x"}), hs(L, {"x-1"}), hs(L, {"x-5"})});
  CHECK(none.status == SearchStatus::None);
  CHECK(none.diagnostics.size() >= 3);

  SearchOutcome empty = search_map_invariant(shift, {});
  CHECK(empty.status == SearchStatus::None);
}

TEST_CASE("first-integral search pipeline") {
  auto P = qplane();
  Derivation euler(P, {rf("x", "1", P), rf("y", "1", P)});
  SearchOutcome out =
      search_first_integral(euler, {hs(P, {"x"}), hs(P, {"y"})});
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.certificate->g == rf("x", "y", P));
  CHECK(euler.apply(out.certificate->g).is_zero());

  Derivation weighted(P, {rf("x", "1", P), rf("2*y", "1", P)});
  SearchOutcome w =
      search_first_integral(weighted, {hs(P, {"x"}), hs(P, {"y"})});
  REQUIRE(w.status == SearchStatus::Found);
  CHECK(w.certificate->g == rf("x^2", "y", P));

  // d/dx with witness V(x) violates the stability hypothesis
  Derivation ddx(P, {rf("1", "1", P),
                     RationalFunction::zero(P->poly_ring(), P->order())});
  SearchOutcome refused = search_first_integral(ddx, {hs(P, {"x"})});
  CHECK(refused.status == SearchStatus::Refused);
}

TEST_CASE("d-ring invariant search routes by algebra shape") {
  auto P = qplane();
  CoeffField QQ = CoeffField::rationals();

  // differential route (dual numbers, Euler field)
  auto dual = std::make_shared<const FiniteAlgebra>(
      FiniteAlgebra::dual_numbers(QQ));
  std::vector<TensorElement> e_euler{
      TensorElement{{rf("x", "1", P), rf("x", "1", P)}},
      TensorElement{{rf("y", "1", P), rf("y", "1", P)}}};
  DRingStructure Deuler(P, dual, e_euler);
  SearchOutcome a =
      search_dring_invariant(Deuler, {hs(P, {"x"}), hs(P, {"y"})});
  REQUIRE(a.status == SearchStatus::Found);
  CHECK(a.certificate->g == rf("x", "y", P));

  // difference route (split pair, sigma = doubling on both variables)
  auto pairalg = std::make_shared<const FiniteAlgebra>(
      FiniteAlgebra::split_pair(QQ));
  std::vector<TensorElement> e_double{
      TensorElement{{rf("x", "1", P), rf("2*x", "1", P)}},
      TensorElement{{rf("y", "1", P), rf("2*y", "1", P)}}};
  DRingStructure Ddouble(P, pairalg, e_double);
  SearchOutcome b =
      search_dring_invariant(Ddouble, {hs(P, {"x"}), hs(P, {"y"})});
  REQUIRE(b.status == SearchStatus::Found);
  CHECK(pullback_function(Ddouble.associated_endomorphisms()[1],
                          b.certificate->g) == b.certificate->g);

  // hypothesis failure is refused: shift is not totally invariant on V(x)
  std::vector<TensorElement> e_shift{
      TensorElement{{rf("x", "1", P), rf("x+1", "1", P)}},
      TensorElement{{rf("y", "1", P), rf("y", "1", P)}}};
  DRingStructure Dshift(P, pairalg, e_shift);
  SearchOutcome c = search_dring_invariant(Dshift, {hs(P, {"x"})});
  CHECK(c.status == SearchStatus::Refused);

  // trivial structure: every function is invariant, first witness returned
  std::vector<TensorElement> e_triv{
      TensorElement{{rf("x", "1", P), rf("0", "1", P)}},
      TensorElement{{rf("y", "1", P), rf("0", "1", P)}}};
  DRingStructure Dtriv(P, dual, e_triv);
  SearchOutcome d = search_dring_invariant(Dtriv, {hs(P, {"x-7"})});
  REQUIRE(d.status == SearchStatus::Found);
  CHECK(d.certificate->g == rf("x-7", "1", P));
}

TEST_CASE("d-ring search verifies the full structure on jets") {
  auto P = qplane();
  CoeffField QQ = CoeffField::rationals();
  auto jets = std::make_shared<const FiniteAlgebra>(
      FiniteAlgebra::jet_plane(QQ));
  // e(r) = r + δ(r) eps + (δ²/2)(r) eps²  for the Euler field: on
  // generators δ(x)=x, δ²/2(x) = x/2
  std::vector<TensorElement> e_imgs{
      TensorElement{{rf("x", "1", P), rf("x", "1", P), rf("1/2*x", "1", P)}},
      TensorElement{{rf("y", "1", P), rf("y", "1", P), rf("1/2*y", "1", P)}}};
  DRingStructure D(P, jets, e_imgs);
  SearchOutcome out = search_dring_invariant(D, {hs(P, {"x"}), hs(P, {"y"})});
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(D.is_d_constant(out.certificate->g));
}

TEST_CASE("level sets") {
  auto P = qplane();
  auto sets =
      level_sets(rf("x", "1", P),
                 {Coeff::integer(1), Coeff::integer(2)}, P);
  REQUIRE(sets.size() == 2);
  CHECK(same_factor_sets(sets[0], hs(P, {"x-1"})));
  CHECK(same_factor_sets(sets[1], hs(P, {"x-2"})));

  auto ratio = level_sets(rf("x", "y", P), {Coeff::integer(1)}, P);
  REQUIRE(ratio.size() == 1);
  CHECK(same_factor_sets(ratio[0], hs(P, {"x-y"})));

  auto split = level_sets(rf("x^2", "1", P), {Coeff::integer(4)}, P);
  REQUIRE(split.size() == 1);
  CHECK(same_factor_sets(split[0], hs(P, {"x-2", "x+2"})));

  std::vector<std::string> skipped;
  auto degenerate =
      level_sets(rf("x", "1", P), {Coeff::integer(0)}, P, &skipped);
  CHECK(degenerate.size() == 1);  // V(x) is fine at level 0
  auto none = level_sets(rf("x", "x-1", P), {Coeff::integer(1)}, P, &skipped);
  CHECK(none.empty());  // x - (x-1) = 1 degenerates
  CHECK_FALSE(skipped.empty());
}

TEST_CASE("round trip: level sets are invariant and recover a certificate") {
  auto P = qplane();
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 5; ++trial) {
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 2);
    Polynomial q = planted_fiber_poly(rng, P->poly_ring(), k);
    DynamicalSystem sys(
        RationalMap(P, P, {rf("x", "1", P), RationalFunction(q)}));
    auto sets = level_sets(rf("x", "1", P),
                           {Coeff::integer(1), Coeff::integer(2),
                            Coeff::integer(3)},
                           P);
    REQUIRE(sets.size() == 3);
    for (const auto& H : sets) REQUIRE(totally_invariant_check(sys, H));
    SearchOutcome out = search_map_invariant(sys, sets);
    REQUIRE(out.status == SearchStatus::Found);
    REQUIRE(pullback_function(sys.map(), out.certificate->g) ==
            out.certificate->g);
  }
}

TEST_CASE("frobenius regression") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FrobeniusReport rep = frobenius_demo(p);
    CHECK(rep.p == p);
    CHECK_FALSE(rep.separable);
    CHECK(rep.search_status == SearchStatus::Refused);
    REQUIRE(rep.points.size() == p);
    for (const auto& pt : rep.points) {
      REQUIRE(pt.scheme_divisor.terms.size() == 1);
      CHECK(pt.scheme_divisor.terms[0].multiplicity == p);
      CHECK_FALSE(pt.scheme_radical);
      REQUIRE(pt.transform.component_count() == 1);
      CHECK(pt.transform.factors()[0].poly ==
            pt.scheme_divisor.terms[0].factor);
    }
  }
}

TEST_CASE("char-p refusal precedes any certificate") {
  // any candidate g with g∘Frobenius = g would satisfy g^p = g and hence
  // be constant; the pipeline refuses before searching
  auto L5 = make_ring(CoeffField::prime_field(5), {"x"});
  DynamicalSystem sys(RationalMap(L5, L5, {rf("x^5", "1", L5)}));
  std::vector<Hypersurface> witnesses;
  for (long c = 0; c < 5; ++c)
    witnesses.push_back(Hypersurface(
        L5, {{L5->parse("x") - Polynomial::constant(L5->poly_ring(), c),
              true}}));
  SearchOutcome out = search_map_invariant(sys, witnesses);
  CHECK(out.status == SearchStatus::Refused);
  CHECK_FALSE(out.certificate.has_value());
  // direct verification failure for the would-be candidate x
  RationalFunction x = rf("x", "1", L5);
  CHECK_FALSE(pullback_function(sys.map(), x) == x);
}

TEST_CASE("separable char-p systems are not refused") {
  auto L5 = make_ring(CoeffField::prime_field(5), {"x"});
  DynamicalSystem sys(RationalMap(L5, L5, {rf("2*x", "1", L5)}));
  SearchOutcome out = search_map_invariant(
      sys, {Hypersurface(L5, {{L5->parse("x"), true}})});
  CHECK(out.status != SearchStatus::Refused);
}
