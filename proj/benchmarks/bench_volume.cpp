#include <benchmark/benchmark.h>

#include <numbers>

#include "slopesmith/curve_path.hpp"
#include "slopesmith/hyp_volume.hpp"
#include "slopesmith/poly_text.hpp"
#include "slopesmith/roots.hpp"

using namespace slopesmith;

static void BM_Lobachevsky(benchmark::State& state) {
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyp::lobachevsky(theta));
    theta += 1e-3;
  }
}
BENCHMARK(BM_Lobachevsky);

static void BM_KleinVolumeIdeal(benchmark::State& state) {
  const auto t = hyp::regular_ideal_tet();
  for (auto _ : state) benchmark::DoNotOptimize(hyp::klein_volume(t, 1e-9));
}
BENCHMARK(BM_KleinVolumeIdeal)->Unit(benchmark::kMillisecond);

static void BM_KleinVolumeRegular(benchmark::State& state) {
  const auto t = hyp::regular_tet(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hyp::klein_volume(t, 1e-10));
}
BENCHMARK(BM_KleinVolumeRegular)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_TrackCurve(benchmark::State& state) {
  const auto a = parse_poly("m^4 + l*(-1 + m^2 + 2*m^4 + m^6 - m^8) + l^2*m^4", VarNames::ml());
  const auto way = hyp::circle_waypoints({1.5, 0.5}, 0.1, 128);
  const auto b0 = polynomial_roots(specialize_complex(a, 0, way.front())).front();
  for (auto _ : state) benchmark::DoNotOptimize(hyp::integrate_eta(hyp::track_curve(a, {way.front(), b0}, way)));
}
BENCHMARK(BM_TrackCurve)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
