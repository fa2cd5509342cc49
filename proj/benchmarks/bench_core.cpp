#include <benchmark/benchmark.h>

#include "diracint/root_analysis.hpp"
#include "diracint/sequence.hpp"
#include "diracint/solutions.hpp"
#include "diracint/potentials.hpp"
#include "diracint/sturm.hpp"

using namespace diracint;

static void BM_GenerateSequence(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PolySequence seq = generate_sequence(Subcase::S2, d, 1);
        benchmark::DoNotOptimize(&seq);
    }
}
BENCHMARK(BM_GenerateSequence)->Arg(4)->Arg(8)->Arg(12);

static void BM_ConditionSliceIsolate(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    PolySequence seq = generate_sequence(Subcase::S1, d, -1);
    BiPoly cond = seq.condition(ConditionKind::Full);
    Rational alpha(1, 3);
    for (auto _ : state) {
        UniPoly slice = cond.eval_alpha(alpha);
        auto boxes = isolate_roots(slice);
        benchmark::DoNotOptimize(&boxes);
    }
}
BENCHMARK(BM_ConditionSliceIsolate)->Arg(5)->Arg(7)->Arg(9);

static void BM_CurveColumn(benchmark::State& state) {
    PolySequence seq = generate_sequence(Subcase::S3, 7, 1);
    Rational m(17, 25);
    for (auto _ : state) {
        CurveScan scan = scan_curve(seq, m, m, Rational(1), Rational(1, 1024),
                                    ConditionKind::Full, 1);
        benchmark::DoNotOptimize(&scan);
    }
}
BENCHMARK(BM_CurveColumn);

static void BM_ResidualSymbolic(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    PolySequence seq = generate_sequence(Subcase::S4, d, 1);
    BiPoly e2 = BiPoly(Rational(-2 * (d + 1))) + BiPoly::monomial(0, 1, Rational(4));
    for (auto _ : state) {
        Poly<BiPoly> pre = seq.prefactor_symbolic();
        RatFunc<BiPoly> omega = subcase_omega<BiPoly>(Subcase::S4, BiPoly::alpha(),
                                                      BiPoly::m(), 1);
        RatFunc<BiPoly> r = heun_r<BiPoly>(BiPoly::alpha(), BiPoly::m(), 1, e2);
        RatFunc<BiPoly> res = residual_identity(pre, omega, r);
        benchmark::DoNotOptimize(&res);
    }
}
BENCHMARK(BM_ResidualSymbolic)->Arg(2)->Arg(4);

static void BM_SolveR1(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Rational> poles;
    for (int i = 0; i < n; ++i) poles.push_back(Rational(i));
    for (auto _ : state) {
        UniPoly r1 = solve_R1(poles);
        benchmark::DoNotOptimize(&r1);
    }
}
BENCHMARK(BM_SolveR1)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
