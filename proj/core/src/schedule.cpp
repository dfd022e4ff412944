#include "dadqc/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dadqc/error.hpp"

namespace dadqc {

double ln_cosh(double u) {
    const double a = std::abs(u);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double ln_cosh_defect(double u) {
    return std::numbers::ln2 - std::log1p(std::exp(-2.0 * u));
}

SigmoidSchedule SigmoidSchedule::create(double A0, double B0, double T, double delta,
                                        double mu) {
    if (A0 < 0 || B0 < 0) throw std::invalid_argument("schedule: A0, B0 must be >= 0");
    if (!(T > 0)) throw std::invalid_argument("schedule: T must be positive");
    if (!(delta > 0) || !(delta < T))
        throw std::invalid_argument("schedule: delta must satisfy 0 < delta < T");
    if (!(mu > 0)) throw std::invalid_argument("schedule: mu must be positive");
    SigmoidSchedule sched;
    sched.A0 = A0;
    sched.B0 = B0;
    sched.T = T;
    sched.delta = delta;
    sched.mu = mu;
    sched.s0 = sched.stilde(0.0);
    sched.kappa = sched.stilde(T) - sched.s0;
    return sched;
}

double SigmoidSchedule::stilde(double t) const {
    // Logistic form of (1 + tanh(u))/2, full relative precision in the tails.
    const double u = 2.0 * (t - (T - delta)) / mu;
    if (u >= 0) return 1.0 / (1.0 + std::exp(-u));
    const double e = std::exp(u);
    return e / (1.0 + e);
}

double SigmoidSchedule::s(double t) const { return (stilde(t) - s0) / kappa; }

std::pair<double, double> SigmoidSchedule::evaluate(double t) const {
    if (t < 0 || t > T)
        throw std::domain_error("schedule: t = " + std::to_string(t) + " outside [0, T]");
    const double st = s(t);
    return {A0 * (1.0 - st), B0 * st};
}

double SigmoidSchedule::stilde_antiderivative(double t) const {
    const double u = (t - (T - delta)) / mu;
    const double u0 = -(T - delta) / mu;
    return 0.5 * t + 0.5 * mu * (ln_cosh(u) - ln_cosh(u0));
}

double SigmoidSchedule::b_integral(double t0, double t1) const {
    const double ds = stilde_antiderivative(t1) - stilde_antiderivative(t0);
    return B0 * (ds - s0 * (t1 - t0)) / kappa;
}

double SigmoidSchedule::a_integral(double t0, double t1) const {
    const double ds = stilde_antiderivative(t1) - stilde_antiderivative(t0);
    return A0 * ((t1 - t0) - (ds - s0 * (t1 - t0)) / kappa);
}

ScheduleIntegrals integrals(const SigmoidSchedule& sched) {
    const double x = (sched.T - sched.delta) / sched.mu;
    const double y = sched.delta / sched.mu;
    ScheduleIntegrals out;
    out.kappa = sched.kappa;
    out.eta = (sched.B0 / out.kappa) *
              (0.5 * sched.mu * ln_cosh_defect(x) - sched.s0 * (sched.T - sched.delta));
    out.beta = (sched.B0 / out.kappa) *
               (0.5 * sched.delta + 0.5 * sched.mu * ln_cosh(y) - sched.s0 * sched.delta);
    out.delta_alpha =
        (sched.A0 * sched.mu / (2.0 * out.kappa)) * (y * std::tanh(y) - ln_cosh(y));
    const double s_total = (sched.stilde_antiderivative(sched.T) - sched.s0 * sched.T) /
                           out.kappa;
    out.alpha_T = sched.A0 * (sched.T - s_total);
    return out;
}

double kappa_lower_bound(const SigmoidSchedule& sched) {
    const double w = std::min(sched.T - sched.delta, sched.delta);
    return 1.0 - 2.0 * std::exp(-2.0 * w / sched.mu);
}

MuSolution solve_mu(double target_eps, double hi_norm, double k_norm,
                    double A0, double B0, double T, double delta) {
    if (!(target_eps > 0)) throw std::invalid_argument("solve_mu: target_eps must be positive");
    if (hi_norm < 0 || k_norm < 0)
        throw std::invalid_argument("solve_mu: norms must be nonnegative");
    const double two_ln2 = 2.0 * std::numbers::ln2;

    double kappa = 1.0;
    double beta = B0 * delta;
    double denom = B0 * hi_norm + k_norm * beta * A0;
    if (denom <= 0) return MuSolution{0.0, true, 0};

    double mu = target_eps * kappa / (two_ln2 * denom);
    for (int it = 1; it <= 100; ++it) {
        const auto sched = SigmoidSchedule::create(A0, B0, T, delta, mu);
        const auto ints = integrals(sched);
        kappa = ints.kappa;
        beta = ints.beta;
        denom = B0 * hi_norm + k_norm * beta * A0;
        if (denom <= 0) return MuSolution{0.0, true, it};
        const double next = target_eps * kappa / (two_ln2 * denom);
        if (std::abs(next - mu) <= 1e-12 * std::abs(mu)) {
            return MuSolution{next, false, it};
        }
        mu = next;
    }
    throw NumericalError("solve_mu: fixed point did not converge in 100 iterations; last mu = " +
                         std::to_string(mu));
}

}  // namespace dadqc
