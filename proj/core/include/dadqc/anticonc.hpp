#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dadqc/distribution.hpp"
#include "dadqc/evolution.hpp"
#include "dadqc/graph.hpp"
#include "dadqc/iqp.hpp"
#include "dadqc/schedule.hpp"

namespace dadqc {

// Ensemble over (G, theta): G a uniform d-factor of the host, theta i.i.d.
// uniform on [0, 2*pi)^n, graph-state two-qubit angles w = pi/4, fixed
// one-qubit angles v (default 0). d = 0 is a product-state test mode.
struct EnsembleConfig {
    HardwareGraph host;
    int d = 3;
    int instances = 1000;
    RandomSeed seed;
    std::vector<double> fixed_v;                    // empty -> zeros
    std::vector<std::uint64_t> target_strings = {0};
    std::uint64_t swap_steps = 0;                   // 0 -> default_swap_steps
    int threads = 1;
};

// Independent draw keyed by (seed, index).
std::pair<InteractionGraph, MeasurementAngles> sample_instance(const EnsembleConfig& config,
                                                               int index);

// p_{G,theta}: graph-state IQP output distribution of one instance.
Distribution instance_distribution(const EnsembleConfig& config, const InteractionGraph& g,
                                   const MeasurementAngles& theta);

// Ensemble moment statistics; all estimates carry standard errors.
struct MomentReport {
    int instances = 0;
    int n = 0;
    std::vector<double> mean_p, mean_p_se;      // E[p(s)] per target string
    std::vector<double> mean_p2, mean_p2_se;    // E[p(s)^2] per target string
    double m2_mean = 0, m2_se = 0;              // E[2^n sum_s p(s)^2]
    std::vector<double> pz_fraction, pz_fraction_se;  // Pr[p(s) >= 2^{-n}/2]

    // Paley-Zygmund floor from the measured moments: E[p]^2 / (4 E[p^2]).
    double pz_bound(std::size_t target) const;
};

// Exact per-instance quantities (full-distribution sums, no shot noise).
struct InstanceMoments {
    int index = 0;
    std::uint64_t graph_hash = 0;
    std::vector<double> p;  // p(s) per target string
    double m2 = 0;          // 2^n sum_s p(s)^2
};

std::vector<InstanceMoments> instance_moments(const EnsembleConfig& config);
MomentReport summarize(const EnsembleConfig& config,
                       const std::vector<InstanceMoments>& rows);

MomentReport moment_scan(const EnsembleConfig& config);
MomentReport first_moment(const EnsembleConfig& config);
MomentReport second_moment(const EnsembleConfig& config);
MomentReport paley_zygmund_fraction(const EnsembleConfig& config);

// Joint fixed point of the schedule width and the angle scaling: the diagonal
// coefficients are targets/beta so that beta*h, beta*J hit the requested
// scaled angles, beta follows the schedule, and mu comes from solve_mu at the
// requested eps. Norms are exact for n <= 12, analytic bounds beyond.
struct CalibrationResult {
    SigmoidSchedule sched;
    IsingParams params;
    double mu = 0;
    double beta = 0;
    double hi_norm = 0;
    double k_norm = 0;
    double budget = 0;  // eta*|H_I| + K*beta*dAlpha
    bool exact_norms = true;
    int iterations = 0;
};

CalibrationResult calibrate_scaled_angles(const InteractionGraph& g,
                                          const std::vector<double>& scaled_h,
                                          const std::vector<double>& scaled_J, double eps,
                                          double A0, double B0, double T, double delta);

// One full pipeline instance: graph-state calibration beta*J = pi/4, mu from
// solve_mu at the requested eps, DADQC run vs IQP target.
struct SupremacyOptions {
    double eps = 0.2;
    double A0 = 1.0, B0 = 1.0, T = 4.0, delta = 1.0;
    EvolutionConfig evolution{4096, 1e-9, true};
};

struct SupremacyRecord {
    int index = 0;
    std::uint64_t graph_hash = 0;
    double tv = 0;
    double budget = 0;  // eta*|H_I| + K*beta*dAlpha
    double mu = 0;
    double beta = 0;
    double hi_norm = 0;
    double k_norm = 0;
    bool pass = false;  // tv <= eps/2
};

SupremacyRecord run_supremacy_instance(const EnsembleConfig& config,
                                       const SupremacyOptions& options, int index);
std::vector<SupremacyRecord> run_supremacy_ensemble(const EnsembleConfig& config,
                                                    const SupremacyOptions& options);

// Runs fn(0..count-1) across threads; callers store into per-index slots so
// results are independent of the thread count.
void parallel_for_index(int count, int threads, const std::function<void(int)>& fn);

}  // namespace dadqc
