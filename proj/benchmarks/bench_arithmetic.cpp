#include <benchmark/benchmark.h>

#include <invkit/parse.hpp>
#include <invkit/polynomial_gcd.hpp>

using namespace invkit;

namespace {

void BM_poly_mul(benchmark::State& state) {
  auto R = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  Polynomial a = parse_polynomial("(x+y+z+1)^6", R);
  Polynomial b = parse_polynomial("(x-y+2*z-3)^6", R);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul);

void BM_multivariate_gcd(benchmark::State& state) {
  auto R = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  Polynomial f = parse_polynomial("(x^2+y+1)^2*(x-y)^3", R);
  Polynomial g = parse_polynomial("(x^2+y+1)*(x+y)^4", R);
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(f, g));
}
BENCHMARK(BM_multivariate_gcd);

void BM_squarefree_part(benchmark::State& state) {
  auto R = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  Polynomial f = parse_polynomial("(x-y)^3*(x+y)^2*(x^2+y^2+1)", R);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_part(f));
}
BENCHMARK(BM_squarefree_part);

}  // namespace
