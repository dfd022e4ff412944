#pragma once

#include <string>
#include <vector>

#include "dadqc/dense.hpp"
#include "dadqc/distribution.hpp"
#include "dadqc/evolution.hpp"
#include "dadqc/iqp.hpp"
#include "dadqc/schedule.hpp"

namespace dadqc {

// Measured left side vs analytic right side of one inequality.
struct BoundReport {
    std::string check;
    double lhs = 0;
    double rhs = 0;
    std::string instance;

    double slack() const { return rhs - lhs; }
};

// H~_I(t) = G_X(-alpha(t)) H_I G_X(alpha(t)); spectrum equals H_I's.
CMatrix interaction_hamiltonian(const IsingParams& params, const SigmoidSchedule& sched,
                                double t);

// Time-ordered product of midpoint exponentials of -i (int B) H~_I over
// [t0, t1], refined by step doubling until the operator change is below
// config.tolerance.
CMatrix tilde_u_window(const IsingParams& params, const SigmoidSchedule& sched,
                       double t0, double t1, const EvolutionConfig& config);
CMatrix tilde_u(const IsingParams& params, const SigmoidSchedule& sched,
                const EvolutionConfig& config);

// |U~(T) - e^{-i beta H~_I(T)}| <= eta|H_I| + K beta dAlpha, plus the early
// window bound |U~_1 - I| <= eta|H_I|, the late window bound
// |U~_2 - e^{-i beta H~_I(T)}| <= K beta dAlpha, the interaction-picture
// drift |H~_I(T) - H~_I(t)| <= K dAlpha on sampled t, and a second row with
// the schedule-level (mu/kappa) bounds in place of exact eta, dAlpha. n <= 8.
std::vector<BoundReport> duhamel_check(const IsingParams& params,
                                       const SigmoidSchedule& sched,
                                       const EvolutionConfig& config,
                                       const std::string& instance = "");

struct TvBoundOptions {
    bool operator_rows = true;  // dense operator-chain rows (n <= 8)
};

// TV(DADQC, IQP) <= eta|H_I| + K beta dAlpha, with optional dense rows for
// |U'_tot - U'_IQP| <= rhs and TV <= |U'_tot - U'_IQP|. n <= 10.
std::vector<BoundReport> tv_bound_check_dense(const IsingParams& params,
                                      const SigmoidSchedule& sched,
                                      const MeasurementAngles& theta,
                                      const EvolutionConfig& config,
                                      const TvBoundOptions& options = {},
                                      const std::string& instance = "");

// The TV row alone; cheap enough for wide fuzzing.
BoundReport tv_bound_check(const IsingParams& params, const SigmoidSchedule& sched,
                            const MeasurementAngles& theta, const EvolutionConfig& config,
                            const std::string& instance = "");

// |e^{-i(H' + dH')} - e^{-iH'}| <= |dH'| <= sum|d| <= (n+m) delta_par for the
// scaled diagonal Hamiltonian H' = beta H_I. n <= 8.
std::vector<BoundReport> perturbation_check(const IsingParams& params,
                                            const std::vector<double>& dh,
                                            const std::vector<double>& dJ, double beta,
                                            const std::string& instance = "");

}  // namespace dadqc
