#include <benchmark/benchmark.h>

#include "yb/classical/lattice.hpp"
#include "yb/liouville/tau.hpp"
#include "yb/qdilog/star_triangle.hpp"
#include "yb/quantum/lattice.hpp"
#include "yb/suites/suites.hpp"

using namespace yb;
using num::cplx;

static void BM_ClassicalMap(benchmark::State& st) {
    const classical::ClassicalTriple x1{{1.2, 0.3}, {0.2, -0.1}, {0.4, 0.1}}, x2{{0.8, -0.2}, {-0.3, 0.2}, {0.1, 0.3}};
    for (auto _ : st) benchmark::DoNotOptimize(classical::yb_map_kef(x1, x2));
}
BENCHMARK(BM_ClassicalMap);

static void BM_EvolveStep(benchmark::State& st) {
    num::Sampler rng(1);
    const auto s = suites::random_chain(rng, static_cast<int>(st.range(0)), {1.3, 0.2}, {0.8, -0.3});
    for (auto _ : st) benchmark::DoNotOptimize(lattice::evolve_step(s));
}
BENCHMARK(BM_EvolveStep)->Arg(2)->Arg(4)->Arg(8);

static void BM_MonodromyTrace(benchmark::State& st) {
    num::Sampler rng(2);
    const auto s = suites::random_chain(rng, 4, {1.3, 0.2}, {0.8, -0.3});
    for (auto _ : st) benchmark::DoNotOptimize(lattice::monodromy_trace(s, {1.2, 0.3}, lattice::TraceKind::t));
}
BENCHMARK(BM_MonodromyTrace);

static void BM_BuildTau(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    num::Sampler rng(3);
    const auto in = suites::random_liouville_inputs(rng, n, n);
    for (auto _ : st) benchmark::DoNotOptimize(liouville::build_tau(in.alpha, in.beta, in.phi, in.gamma, n, n, in.f0, in.g0));
}
BENCHMARK(BM_BuildTau)->Arg(16)->Arg(64);

static void BM_UniversalR(benchmark::State& st) {
    const auto r = quantum::spin_rep(static_cast<int>(st.range(0)), quantum::QParams::defaults());
    for (auto _ : st) benchmark::DoNotOptimize(quantum::universal_r(r, r));
}
BENCHMARK(BM_UniversalR)->Arg(1)->Arg(3);

static void BM_TransferMatrix(benchmark::State& st) {
    const auto space = quantum::make_chain(static_cast<int>(st.range(0)), quantum::spin_rep(1, quantum::QParams::defaults()));
    for (auto _ : st) benchmark::DoNotOptimize(quantum::transfer_matrix(space, {1.2, 0.3}, quantum::Transfer::T));
}
BENCHMARK(BM_TransferMatrix)->Arg(1)->Arg(2)->Arg(3);

static void BM_LogPhiQuadrature(benchmark::State& st) {
    const auto p = qdilog::DilogParams::defaults();
    for (auto _ : st) benchmark::DoNotOptimize(qdilog::log_phi({0.3, 0.1}, p, qdilog::PhiMethod::quadrature));
}
BENCHMARK(BM_LogPhiQuadrature);

static void BM_LogPhiProduct(benchmark::State& st) {
    const auto p = qdilog::DilogParams::defaults();
    for (auto _ : st) benchmark::DoNotOptimize(qdilog::log_phi({0.3, 0.1}, p, qdilog::PhiMethod::product));
}
BENCHMARK(BM_LogPhiProduct);

static void BM_ThreeLeg(benchmark::State& st) {
    const qdilog::StarParams sp{{0.1, 0.05}, {-0.2, 0.1}, {0.3, -0.05}, {0.6, 0.1}, {0.8, -0.1}};
    const cplx seed = qdilog::three_leg_root(sp) + cplx(0.05, 0.03);
    for (auto _ : st) benchmark::DoNotOptimize(qdilog::three_leg_solve(sp, seed));
}
BENCHMARK(BM_ThreeLeg);
BENCHMARK_MAIN();
