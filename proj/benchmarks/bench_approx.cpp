#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "gsobolev/corpus.hpp"
#include "gsobolev/error_metrics.hpp"
#include "gsobolev/spline_approx.hpp"
#include "gsobolev/trig_interp.hpp"

namespace {

using namespace gsob;

void BM_build_trig_pow2(benchmark::State& state) {
    const TestFunction f = corpus_lookup("abs3");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_trig_interpolant(f, n, 6.0, 1.0));
    state.SetComplexityN(n);
}
BENCHMARK(BM_build_trig_pow2)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

// odd sizes exercise the chirp-z path instead of plain radix-2
void BM_build_trig_odd(benchmark::State& state) {
    const TestFunction f = corpus_lookup("abs3");
    const int n = static_cast<int>(state.range(0)) + 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_trig_interpolant(f, n, 6.0, 1.0));
    state.SetComplexityN(n);
}
BENCHMARK(BM_build_trig_odd)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_evaluate_trig(benchmark::State& state) {
    const TestFunction f = corpus_lookup("gauss_bump");
    const auto interp = build_trig_interpolant(f, static_cast<int>(state.range(0)), 6.0, 1.0);
    double x = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_trig_weighted(interp, x));
        x += 0.1;
        if (x > 5.0) x = -5.0;
    }
}
BENCHMARK(BM_evaluate_trig)->Arg(65)->Arg(257)->Arg(1025);

void BM_fit_interval_smoother(benchmark::State& state) {
    const int nu = static_cast<int>(state.range(0));
    const auto pts = interval_points(nu, 1);
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = std::sin(3.0 * pts[i]);
    const MaternKernel kernel(1.5, 1.0);
    const double lambda = std::pow(double(nu), -4.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_interval_smoother(pts, vals, kernel, lambda));
}
BENCHMARK(BM_fit_interval_smoother)->RangeMultiplier(2)->Range(8, 128);

void BM_weighted_error_trig(benchmark::State& state) {
    const TestFunction f = corpus_lookup("abs3");
    const auto interp = build_trig_interpolant(f, 65, 6.0, 1.0);
    const auto cfg = QuadratureConfig::for_support(6.0, f.kinks);
    for (auto _ : state)
        benchmark::DoNotOptimize(weighted_lp_error(f, interp, 1.0, cfg));
}
BENCHMARK(BM_weighted_error_trig);

void BM_build_spline(benchmark::State& state) {
    const TestFunction f = corpus_lookup("abs3");
    const int m = static_cast<int>(state.range(0));
    const MaternKernel kernel(1.5, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_spline_approximant(f, m, kernel, 1, 1.0));
}
BENCHMARK(BM_build_spline)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
