#include <benchmark/benchmark.h>

#include "qschubert/frames.hpp"
#include "qschubert/qmatrix.hpp"

using namespace qs;

namespace {

const CartanData& a3() {
    static const CartanData c = CartanData::builtin('A', 3);
    return c;
}

const Word kLongest{1, 2, 1, 3, 2, 1};

}  // namespace

static void BM_BruhatAllPairsA3(benchmark::State& state) {
    auto elems = enumerate_elements(a3(), 6);
    for (auto _ : state) {
        int n = 0;
        for (const auto& u : elems)
            for (const auto& w : elems) n += bruhat_leq(a3(), u, w);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_BruhatAllPairsA3);

static void BM_RightPositive(benchmark::State& state) {
    WeylElement u = element_of_word(a3(), {2, 1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(rp(a3(), kLongest, u));
}
BENCHMARK(BM_RightPositive);

static void BM_OracleSubexpr(benchmark::State& state) {
    WeylElement u = element_of_word(a3(), {2, 1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(oracle_positive_subexpr(a3(), kLongest, u, Side::Right));
}
BENCHMARK(BM_OracleSubexpr);

static void BM_AMatrix(benchmark::State& state) {
    WeylElement u = element_of_word(a3(), {2});
    for (auto _ : state) benchmark::DoNotOptimize(a_matrix(a3(), kLongest, u));
}
BENCHMARK(BM_AMatrix);

static void BM_FramesAllXi(benchmark::State& state) {
    WeylElement u = element_of_word(a3(), {2});
    for (auto _ : state)
        xi_for_each(6, [&](const PiElement& p) { benchmark::DoNotOptimize(frame_bicharacter(a3(), kLongest, u, p)); });
}
BENCHMARK(BM_FramesAllXi);

static void BM_XiEnumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(xi_enumerate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_XiEnumerate)->Arg(8)->Arg(12);

static void BM_TorusProduct(benchmark::State& state) {
    TorusPtr t = make_torus({{0, 1, -2}, {-1, 0, 3}, {2, -3, 0}});
    TorusElement x = TorusElement::generator(t, 0) + TorusElement::generator(t, 1).scaled(ScalarQ::s_pow(3)) +
                     TorusElement::monomial(t, {-1, 2, 1}, ScalarQ(1) + ScalarQ::s_pow(1));
    for (auto _ : state) benchmark::DoNotOptimize(x * x * x);
}
BENCHMARK(BM_TorusProduct);

static void BM_QMatrixMain(benchmark::State& state) {
    QMatrixModel q = build_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    WeylElement u = identity_element(q.cartan);
    for (auto _ : state) benchmark::DoNotOptimize(verify_minor_formula_all(q, u));
}
BENCHMARK(BM_QMatrixMain)->Args({2, 2})->Args({2, 3})->Args({3, 3});

BENCHMARK_MAIN();
