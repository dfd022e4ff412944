#include "dadqc/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dadqc/error.hpp"

namespace dadqc {

namespace {

using Complex = std::complex<double>;

void check_state(const StateVector& state) {
    if (state.n < 1 || state.n > 24)
        throw std::invalid_argument("StateVector: n outside 1..24");
    if (state.amps.size() != (1ull << state.n))
        throw std::invalid_argument("StateVector: amplitude count != 2^n");
}

// Applies a 2x2 gate [[g00, g01], [g10, g11]] to every qubit.
template <typename Update>
void for_each_pair(StateVector& state, int qubit, Update&& update) {
    const std::uint64_t bit = 1ull << qubit;
    const std::uint64_t dim = state.amps.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & bit) continue;
        update(state.amps[base], state.amps[base | bit]);
    }
}

double l2_diff(const StateVector& a, const StateVector& b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        acc += std::norm(a.amps[i] - b.amps[i]);
    }
    return std::sqrt(acc);
}

}  // namespace

StateVector StateVector::all_zero(int n) {
    if (n < 1 || n > 24) throw std::invalid_argument("StateVector: n outside 1..24");
    StateVector s;
    s.n = n;
    s.amps.assign(1ull << n, Complex(0, 0));
    s.amps[0] = Complex(1, 0);
    return s;
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto& a : amps) acc += std::norm(a);
    return std::sqrt(acc);
}

Distribution StateVector::probabilities() const {
    Distribution d;
    d.n = n;
    d.p.resize(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) d.p[i] = std::norm(amps[i]);
    return d;
}

MeasurementAngles MeasurementAngles::random(int n, RandomSeed seed) {
    CounterRng rng(seed, 3);
    MeasurementAngles m;
    m.theta.resize(n);
    for (auto& t : m.theta) t = rng.next_angle();
    return m;
}

void apply_global_x_rotation(StateVector& state, double angle) {
    check_state(state);
    const double c = std::cos(angle);
    const Complex mis(0, -std::sin(angle));
    for (int q = 0; q < state.n; ++q) {
        for_each_pair(state, q, [&](Complex& a0, Complex& a1) {
            const Complex b0 = c * a0 + mis * a1;
            const Complex b1 = mis * a0 + c * a1;
            a0 = b0;
            a1 = b1;
        });
    }
}

void apply_hadamard_all(StateVector& state) {
    check_state(state);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int q = 0; q < state.n; ++q) {
        for_each_pair(state, q, [&](Complex& a0, Complex& a1) {
            const Complex b0 = (a0 + a1) * inv_sqrt2;
            const Complex b1 = (a0 - a1) * inv_sqrt2;
            a0 = b0;
            a1 = b1;
        });
    }
}

void apply_rz_layer(StateVector& state, const MeasurementAngles& angles) {
    check_state(state);
    if (angles.theta.size() != static_cast<std::size_t>(state.n))
        throw std::invalid_argument("apply_rz_layer: angle count != n");
    for (int q = 0; q < state.n; ++q) {
        const Complex p0 = std::polar(1.0, -0.5 * angles.theta[q]);
        const Complex p1 = std::polar(1.0, 0.5 * angles.theta[q]);
        for_each_pair(state, q, [&](Complex& a0, Complex& a1) {
            a0 *= p0;
            a1 *= p1;
        });
    }
}

void apply_diagonal_phase(StateVector& state, std::span<const double> energy, double scale) {
    check_state(state);
    if (energy.size() != state.amps.size())
        throw std::invalid_argument("apply_diagonal_phase: energy table size != 2^n");
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        state.amps[i] *= std::polar(1.0, -scale * energy[i]);
    }
}

void apply_diagonal_phase(StateVector& state, const IsingParams& params, double scale) {
    if (params.graph.n != state.n)
        throw std::invalid_argument("apply_diagonal_phase: qubit count mismatch");
    const auto table = energy_table(params);
    apply_diagonal_phase(state, table, scale);
}

namespace {

StateVector run_strang(const StateVector& initial, const SigmoidSchedule& sched,
                       std::span<const double> energy, std::uint64_t steps) {
    StateVector st = initial;
    const double T = sched.T;
    for (std::uint64_t k = 0; k < steps; ++k) {
        const double t0 = T * (static_cast<double>(k) / steps);
        const double tm = T * ((static_cast<double>(k) + 0.5) / steps);
        const double t1 = T * (static_cast<double>(k + 1) / steps);
        apply_global_x_rotation(st, sched.a_integral(t0, tm));
        apply_diagonal_phase(st, energy, sched.b_integral(t0, t1));
        apply_global_x_rotation(st, sched.a_integral(tm, t1));
    }
    return st;
}

}  // namespace

void evolve_analog(StateVector& state, const SigmoidSchedule& sched,
                   const IsingParams& params, const EvolutionConfig& config) {
    check_state(state);
    if (params.graph.n != state.n)
        throw std::invalid_argument("evolve_analog: qubit count mismatch");
    if (config.steps < 1) throw std::invalid_argument("evolve_analog: steps must be >= 1");
    const auto energy = energy_table(params);
    if (!config.adaptive) {
        state = run_strang(state, sched, energy, config.steps);
        return;
    }
    constexpr std::uint64_t kStepCap = 1ull << 22;
    std::uint64_t steps = config.steps;
    StateVector coarse = run_strang(state, sched, energy, steps);
    for (;;) {
        if (2 * steps > kStepCap) {
            throw NumericalError("evolve_analog: adaptive refinement exceeded 2^22 steps");
        }
        StateVector fine = run_strang(state, sched, energy, 2 * steps);
        const double diff = l2_diff(fine, coarse);
        coarse = std::move(fine);
        steps *= 2;
        if (diff < config.tolerance) break;
    }
    state = std::move(coarse);
}

Distribution dadqc_run(const IsingParams& params, const SigmoidSchedule& sched,
                       const MeasurementAngles& theta, const EvolutionConfig& config) {
    const int n = params.graph.n;
    if (n < 1 || n > 24) throw std::invalid_argument("dadqc_run: n outside 1..24");
    if (theta.theta.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("dadqc_run: theta count != n");
    const auto ints = integrals(sched);
    StateVector st = StateVector::all_zero(n);
    // U_L = S^dag W^{x n}
    apply_hadamard_all(st);
    apply_global_x_rotation(st, -ints.alpha_T);
    evolve_analog(st, sched, params, config);
    // U_R = tensor_i (W R_Z(theta_i))
    apply_rz_layer(st, theta);
    apply_hadamard_all(st);
    return st.probabilities();
}

std::vector<std::uint64_t> sample_bitstrings(const Distribution& dist, std::size_t count,
                                             RandomSeed seed) {
    dist.validate(1e-8);
    std::vector<double> cdf(dist.p.size());
    double acc = 0;
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        acc += dist.p[i];
        cdf[i] = acc;
    }
    const double total = acc;
    CounterRng rng(seed, 2);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = rng.next_double() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out.push_back(static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cdf.begin(),
                                     static_cast<std::ptrdiff_t>(cdf.size()) - 1)));
    }
    return out;
}

}  // namespace dadqc
