#include <benchmark/benchmark.h>

#include <invkit/ideal.hpp>
#include <invkit/parse.hpp>

using namespace invkit;

namespace {

// katsura-3: the usual small stress case for basis completion
Ideal katsura3(const RingPtr& R) {
  return Ideal(R, {parse_polynomial("x+2*y+2*z-1", R),
                   parse_polynomial("x^2+2*y^2+2*z^2-x", R),
                   parse_polynomial("2*x*y+2*y*z-y", R)});
}

void BM_groebner_katsura3(benchmark::State& state) {
  auto R = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  for (auto _ : state) {
    Ideal I = katsura3(R);  // fresh ideal: no cache reuse
    benchmark::DoNotOptimize(groebner_basis(I, MonomialOrder::grevlex()));
  }
}
BENCHMARK(BM_groebner_katsura3);

void BM_groebner_lex_elimination(benchmark::State& state) {
  auto R = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  for (auto _ : state) {
    Ideal I(R, {parse_polynomial("y-x^2", R), parse_polynomial("z-x^3", R)});
    benchmark::DoNotOptimize(elimination_ideal(I, {false, true, true}));
  }
}
BENCHMARK(BM_groebner_lex_elimination);

void BM_saturation(benchmark::State& state) {
  auto R = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  for (auto _ : state) {
    Ideal I(R, {parse_polynomial("x^3*(y-1)^2", R)});
    benchmark::DoNotOptimize(saturation(I, parse_polynomial("x", R)));
  }
}
BENCHMARK(BM_saturation);

}  // namespace
