#include "curvedim/curve_model.hpp"
#include "curvedim/dichotomy.hpp"
#include "curvedim/invariants.hpp"
#include "curvedim/quadrature.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace curvedim;

Poly cuspidal_cubic() {
    return Poly::parse("y^2*z - x^3", {"x", "y", "z"});
}

void BM_analyze_cuspidal_cubic(benchmark::State& state) {
    Poly f = cuspidal_cubic();
    for (auto _ : state) {
        CurveModel m = analyze_implicit(f, CurveModel::Ambient::Affine);
        benchmark::DoNotOptimize(m.points.size());
    }
}
BENCHMARK(BM_analyze_cuspidal_cubic);

void BM_delta_point_ramphoid(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PuiseuxBranch b;
    b.components.push_back(TruncSeries::monomial(2 * n + 1, 2 * n + 1, Rat(1), "t", true));
    b.components.push_back(TruncSeries::monomial(2 * n + 1, 2, Rat(1), "t", true));
    b.mult = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_point({b}));
    }
}
BENCHMARK(BM_delta_point_ramphoid)->Arg(3)->Arg(6);

void BM_quadrature_norm(benchmark::State& state) {
    QuadratureConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_monomial_norm(2, WeightSpec{-1}, 1.0, cfg));
    }
}
BENCHMARK(BM_quadrature_norm);

} // namespace

BENCHMARK_MAIN();
