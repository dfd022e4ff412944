#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dadqc/schedule.hpp"

namespace dadqc {

namespace {

// Integrates evaluate() pointwise; never touches the closed forms.
double integrate(const SigmoidSchedule& sched, bool use_a, double t0, double t1,
                 double rel_tol) {
    auto f = [&](double t) {
        const auto [a, b] = sched.evaluate(std::min(std::max(t, 0.0), sched.T));
        return use_a ? a : b;
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, t0, t1, 20, rel_tol);
}

}  // namespace

ScheduleIntegrals quadrature_integrals(const SigmoidSchedule& sched, double rel_tol) {
    const double split = sched.T - sched.delta;
    ScheduleIntegrals out;
    out.kappa = sched.kappa;
    out.eta = integrate(sched, false, 0.0, split, rel_tol);
    out.beta = integrate(sched, false, split, sched.T, rel_tol);
    out.delta_alpha = integrate(sched, true, split, sched.T, rel_tol);
    out.alpha_T = integrate(sched, true, 0.0, split, rel_tol) + out.delta_alpha;
    return out;
}

}  // namespace dadqc
