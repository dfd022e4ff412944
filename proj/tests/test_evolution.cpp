#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "dadqc/anticonc.hpp"
#include "dadqc/error.hpp"
#include "dadqc/evolution.hpp"
#include "test_util.hpp"

using namespace dadqc;
using dadqc::testutil::make_graph;
using dadqc::testutil::random_instance;
using doctest::Approx;

TEST_SUITE_BEGIN("evolution");

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

double l2_diff(const StateVector& a, const StateVector& b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) acc += std::norm(a.amps[i] - b.amps[i]);
    return std::sqrt(acc);
}

StateVector random_state(int n, RandomSeed seed) {
    CounterRng rng(seed, 4);
    StateVector st = StateVector::all_zero(n);
    double norm = 0;
    for (auto& a : st.amps) {
        a = Complex(rng.next_symmetric(1.0), rng.next_symmetric(1.0));
        norm += std::norm(a);
    }
    for (auto& a : st.amps) a /= std::sqrt(norm);
    return st;
}

// <psi| P_i |psi> for a single-qubit Pauli given by its 2x2 entries.
Complex one_qubit_expectation(const StateVector& st, int qubit,
                              const std::array<std::array<Complex, 2>, 2>& p) {
    Complex acc = 0;
    const std::uint64_t bit = 1ull << qubit;
    for (std::uint64_t x = 0; x < st.amps.size(); ++x) {
        const int b = (x & bit) ? 1 : 0;
        for (int b2 = 0; b2 < 2; ++b2) {
            if (p[b2][b] == Complex(0, 0)) continue;
            const std::uint64_t y = b2 ? (x | bit) : (x & ~bit);
            acc += std::conj(st.amps[y]) * p[b2][b] * st.amps[x];
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("global X rotation basics") {
    StateVector st = StateVector::all_zero(1);
    apply_global_x_rotation(st, 0.0);
    CHECK(st.amps[0] == Complex(1, 0));

    apply_global_x_rotation(st, kPi / 2);  // exp(-i pi/2 X) = -iX
    CHECK(std::abs(st.amps[0]) < 1e-15);
    CHECK(std::abs(st.amps[1] - Complex(0, -1)) < 1e-15);

    StateVector a = random_state(3, RandomSeed{5});
    StateVector b = a;
    apply_global_x_rotation(a, kPi / 4);
    apply_global_x_rotation(a, kPi / 4);
    apply_global_x_rotation(b, kPi / 2);
    CHECK(l2_diff(a, b) < 1e-12);
}

TEST_CASE("diagonal phase basics") {
    const auto params = IsingParams::create(make_graph(1, {}), {1.0}, {});
    StateVector st = random_state(1, RandomSeed{6});
    StateVector id = st;
    apply_diagonal_phase(id, params, 0.0);
    CHECK(l2_diff(id, st) == 0.0);

    // scale = pi with h = 1: both amplitudes pick up the phase -1.
    StateVector ph = st;
    apply_diagonal_phase(ph, params, kPi);
    CHECK(std::abs(ph.amps[0] + st.amps[0]) < 1e-15);
    CHECK(std::abs(ph.amps[1] + st.amps[1]) < 1e-15);
    CHECK(std::abs(std::abs(ph.amps[0]) - std::abs(st.amps[0])) < 1e-15);
}

TEST_CASE("evolve_analog is exact when one generator vanishes") {
    const auto sched = SigmoidSchedule::create(0.8, 1.2, 4.0, 1.0, 0.3);

    // H_I = 0: the splitting collapses to one global X rotation by alpha(T).
    const auto zero = IsingParams::create(make_graph(2, {{0, 1}}, 1), {0, 0}, {0});
    StateVector a = random_state(2, RandomSeed{8});
    StateVector b = a;
    evolve_analog(a, sched, zero, {7, 1e-9, false});
    apply_global_x_rotation(b, integrals(sched).alpha_T);
    CHECK(l2_diff(a, b) < 1e-13);

    // A0 = 0: diagonal-only evolution, independent of the step count.
    const auto diag_sched = SigmoidSchedule::create(0.0, 1.2, 4.0, 1.0, 0.3);
    const auto params = random_instance(3, 2, RandomSeed{9});
    StateVector c = random_state(3, RandomSeed{10});
    StateVector d = c;
    StateVector e = c;
    evolve_analog(c, diag_sched, params, {1, 1e-9, false});
    evolve_analog(d, diag_sched, params, {100, 1e-9, false});
    apply_diagonal_phase(e, params, diag_sched.b_integral(0, diag_sched.T));
    CHECK(l2_diff(c, e) < 1e-13);
    CHECK(l2_diff(d, e) < 1e-13);
}

TEST_CASE("Strang splitting self-converges at second order") {
    // Error against a 16x finer reference drops ~4x when steps double.
    CounterRng rng(RandomSeed{77}, 0);
    for (int i = 0; i < 8; ++i) {
        const int n = 2 + static_cast<int>(rng.next_below(5));
        int d = 1 + static_cast<int>(rng.next_below(n - 1));
        if ((n * d) % 2) d = (d > 1) ? d - 1 : d + 1;
        if (d < 1 || d >= n) continue;
        const auto params = random_instance(n, d, RandomSeed{200u + i});
        const double T = rng.next_in(1.0, 3.0);
        const auto sched = SigmoidSchedule::create(
            rng.next_in(0.4, 1.2), rng.next_in(0.4, 1.2), T, T * rng.next_in(0.2, 0.5),
            T * rng.next_in(0.05, 0.2));
        auto run = [&](std::uint64_t steps) {
            StateVector st = StateVector::all_zero(n);
            apply_hadamard_all(st);
            evolve_analog(st, sched, params, {steps, 0.0, false});
            return st;
        };
        const StateVector ref = run(64 * 16);
        const double e1 = l2_diff(run(64), ref);
        const double e2 = l2_diff(run(128), ref);
        REQUIRE(e2 > 1e-12);  // away from the noise floor
        const double ratio = e1 / e2;
        CHECK(ratio >= 3.5);
        CHECK(ratio <= 4.5);
    }
}

TEST_CASE("adaptive refinement matches a fine fixed-step run") {
    const auto params = random_instance(3, 2, RandomSeed{31});
    const auto sched = SigmoidSchedule::create(1.0, 1.0, 3.0, 1.0, 0.2);
    StateVector a = StateVector::all_zero(3);
    apply_hadamard_all(a);
    StateVector b = a;
    evolve_analog(a, sched, params, {64, 1e-9, true});
    evolve_analog(b, sched, params, {1 << 14, 0.0, false});
    CHECK(l2_diff(a, b) < 1e-7);
}

TEST_CASE("adaptive refinement reports non-convergence at the step cap") {
    const auto params = random_instance(2, 1, RandomSeed{32});
    const auto sched = SigmoidSchedule::create(1.0, 1.0, 3.0, 1.0, 0.2);
    StateVector st = StateVector::all_zero(2);
    CHECK_THROWS_AS(evolve_analog(st, sched, params, {1ull << 22, 0.0, true}),
                    NumericalError);
}

TEST_CASE("dadqc_run trivial instance is the identity") {
    const auto zero = IsingParams::create(make_graph(3, {}), {0, 0, 0}, {});
    const auto sched = SigmoidSchedule::create(1.0, 1.0, 4.0, 1.0, 0.2);
    const auto dist =
        dadqc_run(zero, sched, MeasurementAngles::zero(3), {256, 1e-9, false});
    CHECK(dist.p[0] == Approx(1.0).epsilon(1e-12));
    dist.validate(1e-10);
}

TEST_CASE("dadqc_run one-qubit instance approaches the analytic IQP value") {
    // beta*h = pi/8 with a narrow window: P(0) ~ cos^2(pi/8) within the
    // TV budget eta*|H_I| + K*beta*dAlpha.
    const auto sched = SigmoidSchedule::create(1.0, 1.0, 4.0, 1.0, 0.004);
    const auto ints = integrals(sched);
    const double h = kPi / 8 / ints.beta;
    const auto params = IsingParams::create(make_graph(1, {}), {h}, {});
    const auto dist =
        dadqc_run(params, sched, MeasurementAngles::zero(1), {4096, 1e-10, true});
    const double budget = ints.eta * h + (2 * h) * ints.beta * ints.delta_alpha;
    const double expect = 0.8535533905932737622004;  // cos^2(pi/8)
    CHECK(std::abs(dist.p[0] - expect) <= budget + 1e-9);
    CHECK(dist.p[0] == Approx(expect).epsilon(0.01));
}

TEST_CASE("dadqc_run output is normalized") {
    const auto params = random_instance(5, 2, RandomSeed{33});
    const auto sched = SigmoidSchedule::create(0.9, 1.1, 3.0, 1.0, 0.1);
    const auto dist = dadqc_run(params, sched,
                                MeasurementAngles::random(5, RandomSeed{34}),
                                {512, 1e-8, true});
    CHECK(std::abs(dist.sum() - 1.0) < 1e-10);
    dist.validate(1e-10);
}

TEST_CASE("measuring Z after U_R matches cos(t)X - sin(t)Y before it") {
    const int n = 4;
    const auto theta = MeasurementAngles::random(n, RandomSeed{35});
    for (std::uint64_t s = 0; s < 5; ++s) {
        const StateVector psi = random_state(n, RandomSeed{40 + s});
        StateVector rotated = psi;
        apply_rz_layer(rotated, theta);
        apply_hadamard_all(rotated);
        for (int q = 0; q < n; ++q) {
            const std::array<std::array<Complex, 2>, 2> pz{{{Complex(1, 0), 0},
                                                            {0, Complex(-1, 0)}}};
            const double lhs = one_qubit_expectation(rotated, q, pz).real();
            const double c = std::cos(theta.theta[q]), sn = std::sin(theta.theta[q]);
            const std::array<std::array<Complex, 2>, 2> obs{
                {{Complex(0, 0), Complex(c, sn)}, {Complex(c, -sn), Complex(0, 0)}}};
            const double rhs = one_qubit_expectation(psi, q, obs).real();
            CHECK(lhs == Approx(rhs).scale(1).epsilon(1e-10));
        }
    }
}

TEST_CASE("norm is preserved through the pipeline") {
    const auto params = random_instance(6, 3, RandomSeed{51});
    const auto sched = SigmoidSchedule::create(1.0, 1.0, 3.0, 1.0, 0.05);
    StateVector st = StateVector::all_zero(6);
    apply_hadamard_all(st);
    CHECK(std::abs(st.norm() - 1.0) < 1e-10);
    apply_global_x_rotation(st, -integrals(sched).alpha_T);
    CHECK(std::abs(st.norm() - 1.0) < 1e-10);
    evolve_analog(st, sched, params, {2048, 1e-9, false});
    CHECK(std::abs(st.norm() - 1.0) < 1e-10);
    apply_rz_layer(st, MeasurementAngles::random(6, RandomSeed{52}));
    apply_hadamard_all(st);
    CHECK(std::abs(st.norm() - 1.0) < 1e-10);
}

TEST_CASE("sample_bitstrings") {
    Distribution point{2, {0, 0, 1, 0}};
    for (const auto s : sample_bitstrings(point, 100, RandomSeed{60})) CHECK(s == 2);

    Distribution uniform{2, {0.25, 0.25, 0.25, 0.25}};
    const auto samples = sample_bitstrings(uniform, 40000, RandomSeed{61});
    std::map<std::uint64_t, int> counts;
    for (const auto s : samples) ++counts[s];
    const double sigma = std::sqrt(40000 * 0.25 * 0.75);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(counts[k] - 10000.0) <= 5 * sigma);
    }

    const auto again = sample_bitstrings(uniform, 40000, RandomSeed{61});
    CHECK(samples == again);
}

TEST_SUITE_END();
