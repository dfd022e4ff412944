#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "dadqc/anticonc.hpp"
#include "dadqc/evolution.hpp"
#include "dadqc/iqp.hpp"
#include "dadqc/schedule.hpp"

using namespace dadqc;

namespace {

IsingParams bench_instance(int n) {
    const auto g = sample_d_factor(build_complete(n), 3, RandomSeed{1}, 0);
    CounterRng rng(RandomSeed{2}, 0);
    std::vector<double> h(n), J(g.edges.size());
    for (auto& v : h) v = rng.next_symmetric(1.0);
    for (auto& v : J) v = rng.next_symmetric(1.0);
    return IsingParams::create(g, std::move(h), std::move(J));
}

void BM_FWHT(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::complex<double>> v(1ull << n, {1.0, 0.5});
    for (auto _ : state) {
        fwht(v);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FWHT)->DenseRange(10, 20, 5);

void BM_StrangStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto params = bench_instance(n);
    const auto sched = SigmoidSchedule::create(1, 1, 4, 1, 0.1);
    const auto energy = energy_table(params);
    StateVector st = StateVector::all_zero(n);
    apply_hadamard_all(st);
    for (auto _ : state) {
        apply_global_x_rotation(st, 1e-3);
        apply_diagonal_phase(st, energy, 1e-3);
        apply_global_x_rotation(st, 1e-3);
        benchmark::DoNotOptimize(st.amps.data());
    }
}
BENCHMARK(BM_StrangStep)->DenseRange(8, 16, 4);

void BM_IqpDistribution(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto params = bench_instance(n);
    const auto circuit =
        equivalent_iqp_for_dadqc(params, 1.0, MeasurementAngles::zero(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iqp_distribution(circuit).p.data());
    }
}
BENCHMARK(BM_IqpDistribution)->DenseRange(8, 16, 4);

void BM_PairingSampler(benchmark::State& state) {
    const auto host = build_complete(static_cast<int>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sample_d_factor(host, 3, RandomSeed{seed++}, 0).edges.data());
    }
}
BENCHMARK(BM_PairingSampler)->DenseRange(6, 18, 6);

void BM_ScheduleIntegrals(benchmark::State& state) {
    const auto sched = SigmoidSchedule::create(1, 1, 10, 2, 0.02);
    for (auto _ : state) {
        const auto ints = integrals(sched);
        benchmark::DoNotOptimize(ints.eta);
    }
}
BENCHMARK(BM_ScheduleIntegrals);

void BM_SupremacyInstance(benchmark::State& state) {
    EnsembleConfig ec;
    ec.host = build_complete(6);
    ec.d = 3;
    ec.instances = 1;
    ec.seed = RandomSeed{7};
    SupremacyOptions opt;
    opt.evolution = {1024, 1e-9, true};
    int index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_supremacy_instance(ec, opt, index++).tv);
    }
}
BENCHMARK(BM_SupremacyInstance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
