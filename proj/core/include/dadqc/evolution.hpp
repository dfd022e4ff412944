#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "dadqc/distribution.hpp"
#include "dadqc/ising.hpp"
#include "dadqc/rng.hpp"
#include "dadqc/schedule.hpp"

namespace dadqc {

// 2^n complex amplitudes; bit i of the index is qubit i's Z-basis value
// (qubit 0 is the least significant bit).
struct StateVector {
    int n = 0;
    std::vector<std::complex<double>> amps;

    static StateVector all_zero(int n);  // |0...0>
    double norm() const;                 // 2-norm
    Distribution probabilities() const;
};

struct EvolutionConfig {
    std::uint64_t steps = 4096;
    double tolerance = 1e-8;
    bool adaptive = false;
};

// Per-qubit XY-plane measurement angles theta_i in [0, 2*pi).
struct MeasurementAngles {
    std::vector<double> theta;

    static MeasurementAngles zero(int n) { return {std::vector<double>(n, 0.0)}; }
    static MeasurementAngles random(int n, RandomSeed seed);
};

// exp(-i*angle*X) on every qubit.
void apply_global_x_rotation(StateVector& state, double angle);

void apply_hadamard_all(StateVector& state);

// R_Z(theta_i) = exp(-i*theta_i*Z/2) on each qubit.
void apply_rz_layer(StateVector& state, const MeasurementAngles& angles);

// a_z *= exp(-i*scale*E(z)).
void apply_diagonal_phase(StateVector& state, std::span<const double> energy, double scale);
void apply_diagonal_phase(StateVector& state, const IsingParams& params, double scale);

// Second-order symmetric splitting of the time-ordered evolution under
// A(t)H_X + B(t)H_I: per step, a half-window X rotation, the full-window
// diagonal phase, and the second half-window X rotation, with all window
// integrals taken from the schedule's closed forms. In adaptive mode the
// step count doubles until successive states differ by < tolerance in
// 2-norm (cap 2^22, then NumericalError).
void evolve_analog(StateVector& state, const SigmoidSchedule& sched,
                   const IsingParams& params, const EvolutionConfig& config);

// Full pipeline from |0^n>: U_L = S^dag W^{x n}, the analog block, then
// U_R = tensor_i (W R_Z(theta_i)); returns |amplitude|^2. n <= 24.
Distribution dadqc_run(const IsingParams& params, const SigmoidSchedule& sched,
                       const MeasurementAngles& theta, const EvolutionConfig& config);

// I.i.d. draws by inverse CDF with the counter-based generator.
std::vector<std::uint64_t> sample_bitstrings(const Distribution& dist, std::size_t count,
                                             RandomSeed seed);

}  // namespace dadqc
