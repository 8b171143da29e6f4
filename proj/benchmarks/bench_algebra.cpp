#include <benchmark/benchmark.h>

#include "slopesmith/cs_norm.hpp"
#include "slopesmith/newton_polygon.hpp"
#include "slopesmith/obstruction.hpp"
#include "slopesmith/poly_text.hpp"

using namespace slopesmith;

static void BM_BuildNewP(benchmark::State& state) {
  const auto q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(obstruction::build_newP(1, q, Rational(3)));
}
BENCHMARK(BM_BuildNewP)->Arg(3)->Arg(7)->Arg(15);

static void BM_Multiply(benchmark::State& state) {
  const auto a = obstruction::build_newP(2, 5, Rational(1));
  const auto b = obstruction::build_newP(3, 7, Rational(-2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply);

static void BM_ParsePrint(benchmark::State& state) {
  const std::string text = to_string(obstruction::build_newP(3, 7, Rational(5, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse_poly(text, VarNames::ml())));
}
BENCHMARK(BM_ParsePrint);

static void BM_NewtonPolygon(benchmark::State& state) {
  const auto p = obstruction::build_newP(1, state.range(0), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(newton::boundary_slopes(newton::compute_polygon(p)));
}
BENCHMARK(BM_NewtonPolygon)->Arg(3)->Arg(9);

static void BM_NormBall(benchmark::State& state) {
  const auto n = newton::compute_polygon(obstruction::build_newP(3, 8, Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(norm::ball_polygon(norm::seminorm_from_polygon(n)));
}
BENCHMARK(BM_NormBall);

static void BM_UnityOrder(benchmark::State& state) {
  const UPoly p = UPoly::x_n_minus_one(60) * UPoly({Rational(-2), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(newton::unity_order(p, 120));
}
BENCHMARK(BM_UnityOrder);

static void BM_Irreducibility(benchmark::State& state) {
  const auto p = obstruction::build_P(Rational(7, 3));
  for (auto _ : state) benchmark::DoNotOptimize(obstruction::irreducibility_check(p));
}
BENCHMARK(BM_Irreducibility);

static void BM_CyclicVerdict(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(obstruction::cyclic_verdict(Rational(2)));
}
BENCHMARK(BM_CyclicVerdict)->Unit(benchmark::kMillisecond);
