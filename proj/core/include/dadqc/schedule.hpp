#pragma once

#include <utility>

namespace dadqc {

// ln(cosh u), overflow-safe for all u.
double ln_cosh(double u);

// u - ln(cosh u) for u >= 0; increases from 0 to ln 2.
double ln_cosh_defect(double u);

// Annealing pair A(t) = A0*(1 - s(t)), B(t) = B0*s(t) driven by a normalized
// sigmoid: stilde(t) = (1 + tanh((t - (T - delta))/mu))/2 and
// s(t) = (stilde(t) - s0)/kappa with s0 = stilde(0), kappa = stilde(T) - s0,
// so that s(0) = 0 and s(T) = 1 exactly. Units: hbar = 1 throughout.
struct SigmoidSchedule {
    double A0 = 0, B0 = 0, T = 0, delta = 0, mu = 0;
    double s0 = 0, kappa = 1;  // normalization constants, set by create()

    // Validates A0,B0 >= 0, T > 0, 0 < delta < T, mu > 0.
    static SigmoidSchedule create(double A0, double B0, double T, double delta, double mu);

    double stilde(double t) const;
    double s(double t) const;

    // (A(t), B(t)); throws std::domain_error outside [0, T].
    std::pair<double, double> evaluate(double t) const;

    // Exact antiderivative of stilde on [0, t].
    double stilde_antiderivative(double t) const;

    // Exact window integrals of A and B over [t0, t1] (subset of [0, T]).
    double a_integral(double t0, double t1) const;
    double b_integral(double t0, double t1) const;

    // alpha(t) = integral of A over [0, t].
    double alpha(double t) const { return a_integral(0.0, t); }
};

// eta = int_{[0,T-delta]} B, beta = int_{[T-delta,T]} B,
// delta_alpha = int_{[T-delta,T]} A, alpha_T = int_{[0,T]} A.
struct ScheduleIntegrals {
    double eta = 0;
    double beta = 0;
    double delta_alpha = 0;
    double kappa = 1;
    double alpha_T = 0;
};

// Closed forms, with x = (T-delta)/mu and y = delta/mu:
//   kappa       = (tanh x + tanh y)/2
//   eta         = (B0/kappa) * ((mu/2)(x - ln cosh x) - s0 (T-delta))
//   beta        = (B0/kappa) * (delta/2 + (mu/2) ln cosh y - s0 delta)
//   delta_alpha = (A0 mu / 2 kappa) * (y tanh y - ln cosh y)
ScheduleIntegrals integrals(const SigmoidSchedule& sched);

// Same quantities by adaptive Gauss-Kronrod quadrature of evaluate(); an
// independent route used for cross-checking the closed forms.
ScheduleIntegrals quadrature_integrals(const SigmoidSchedule& sched, double rel_tol = 1e-13);

// 1 - 2 exp(-2 min(T-delta, delta)/mu); kappa is guaranteed >= this value.
double kappa_lower_bound(const SigmoidSchedule& sched);

struct MuSolution {
    double mu = 0;
    bool unconstrained = false;  // zero budget denominator; mu is a free choice
    int iterations = 0;
};

// Transition width such that eta*|H_I| <= eps/4 and K*beta*delta_alpha <= eps/4:
//   mu = eps*kappa / (2 ln2 (B0*hi_norm + K*beta*A0)),
// solved by fixed-point iteration (kappa and beta depend on mu), seeded at
// kappa = 1, beta = B0*delta. Throws NumericalError after 100 iterations.
MuSolution solve_mu(double target_eps, double hi_norm, double k_norm,
                    double A0, double B0, double T, double delta);

}  // namespace dadqc
