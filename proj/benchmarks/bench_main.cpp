#include <benchmark/benchmark.h>

#include "curvenorm/harmonic.hpp"
#include "curvenorm/mobius.hpp"
#include "curvenorm/regularity.hpp"
#include "curvenorm/seminorm.hpp"
#include "curvenorm/zoo.hpp"

using namespace curvenorm;

namespace {

JordanCurve circle(int n) { return make_curve({"circle", {{"R", 1.0}}, n, 0}); }

void BM_DouglasSeminorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const JordanCurve curve = circle(n);
  const CurveFunction f = make_function({"fourier_mode", {{"k", 1.0}}}, curve);
  for (auto _ : state) {
    benchmark::DoNotOptimize(douglas_seminorm(curve, f).value_sq);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_DouglasSeminorm)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_SpectralSeminorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const JordanCurve curve = circle(n);
  const CurveFunction f = make_function({"fourier_mode", {{"k", 3.0}}}, curve);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circle_seminorm_spectral(f).value_sq);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SpectralSeminorm)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_InteriorEnergy(benchmark::State& state) {
  const JordanCurve curve = circle(1024);
  const CurveFunction f = make_function({"fourier_mode", {{"k", 1.0}}}, curve);
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(interior_energy_grid(curve, f, h, 1e-8).energy);
  }
}
BENCHMARK(BM_InteriorEnergy)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_AhlforsConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const JordanCurve curve = circle(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ahlfors_constant(curve).constant);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_AhlforsConstant)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void BM_ChordArcConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const JordanCurve curve = circle(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chord_arc_constant(curve).constant);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChordArcConstant)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_MobiusImage(benchmark::State& state) {
  const JordanCurve curve = circle(1024);
  const MobiusTransform t = MobiusTransform::inversion_about(Complex{2.5, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_mobius(t, curve, 8).length());
  }
}
BENCHMARK(BM_MobiusImage);

}  // namespace

BENCHMARK_MAIN();
