#include "dadqc/bounds.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dadqc/error.hpp"

namespace dadqc {

namespace {

using Complex = std::complex<double>;

// exp(-i*coeff*H~_I(t)): H~_I(t) = G_X(-alpha) H_I G_X(alpha) with H_I
// diagonal, so the exponential is the conjugated diagonal phase, exactly.
CMatrix interaction_evolution(const IsingParams& params, const SigmoidSchedule& sched,
                              const std::vector<double>& energy, double t, double coeff) {
    const CMatrix g = dense_gx(params.graph.n, -sched.alpha(t));
    CVector phases(static_cast<Eigen::Index>(energy.size()));
    for (std::size_t i = 0; i < energy.size(); ++i) {
        phases(static_cast<Eigen::Index>(i)) = std::polar(1.0, -coeff * energy[i]);
    }
    return g * phases.asDiagonal() * g.adjoint();
}

// Normalized Walsh-Hadamard transform of every column.
void hadamard_cols(CMatrix& m, int n) {
    const Eigen::Index dim = m.rows();
    for (Eigen::Index len = 1; len < dim; len <<= 1) {
        for (Eigen::Index block = 0; block < dim; block += 2 * len) {
            for (Eigen::Index i = block; i < block + len; ++i) {
                for (Eigen::Index c = 0; c < m.cols(); ++c) {
                    const Complex x = m(i, c);
                    const Complex y = m(i + len, c);
                    m(i, c) = x + y;
                    m(i + len, c) = x - y;
                }
            }
        }
    }
    m *= std::pow(2.0, -0.5 * n);
}

CMatrix run_midpoint(const IsingParams& params, const SigmoidSchedule& sched,
                     const std::vector<double>& energy, double t0, double t1,
                     std::uint64_t steps) {
    // Step factor G_X(-a_k) D_k G_X(a_k) with G_X(a) = W diag(phases) W in
    // the X basis (normalized W is an involution), so adjacent rotations
    // telescope: only the increments a_k - a_{k-1} appear between the D_k.
    const int n = params.graph.n;
    const Eigen::Index dim = Eigen::Index(1) << n;
    std::vector<double> weight(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        weight[x] = n - 2.0 * std::popcount(static_cast<std::uint64_t>(x));
    }
    CMatrix u = CMatrix::Identity(dim, dim);
    const double width = t1 - t0;
    auto scale_rows = [&](auto&& phase_of) {
        for (Eigen::Index x = 0; x < dim; ++x) u.row(x) *= phase_of(x);
    };
    auto x_rotation = [&](double angle) {
        if (angle == 0) return;
        hadamard_cols(u, n);
        scale_rows([&](Eigen::Index x) { return std::polar(1.0, -angle * weight[x]); });
        hadamard_cols(u, n);
    };
    double prev_alpha = 0;
    for (std::uint64_t k = 0; k < steps; ++k) {
        const double a = t0 + width * (static_cast<double>(k) / steps);
        const double b = t0 + width * (static_cast<double>(k + 1) / steps);
        const double mid = t0 + width * ((static_cast<double>(k) + 0.5) / steps);
        const double alpha = sched.alpha(mid);
        x_rotation(alpha - prev_alpha);
        const double coeff = sched.b_integral(a, b);
        scale_rows([&](Eigen::Index x) { return std::polar(1.0, -coeff * energy[x]); });
        prev_alpha = alpha;
    }
    x_rotation(-prev_alpha);
    return u;
}

}  // namespace

CMatrix interaction_hamiltonian(const IsingParams& params, const SigmoidSchedule& sched,
                                double t) {
    const double a = sched.alpha(t);
    return dense_gx(params.graph.n, -a) * dense_hi(params) * dense_gx(params.graph.n, a);
}

CMatrix tilde_u_window(const IsingParams& params, const SigmoidSchedule& sched,
                       double t0, double t1, const EvolutionConfig& config) {
    if (params.graph.n > 8)
        throw std::invalid_argument("tilde_u_window: n outside 1..8");
    if (!(t0 >= 0 && t1 <= sched.T && t0 <= t1))
        throw std::invalid_argument("tilde_u_window: bad window");
    const auto energy = energy_table(params);
    std::uint64_t steps = std::max<std::uint64_t>(config.steps, 1);
    if (!config.adaptive) return run_midpoint(params, sched, energy, t0, t1, steps);
    constexpr std::uint64_t kStepCap = 1ull << 18;
    CMatrix coarse = run_midpoint(params, sched, energy, t0, t1, steps);
    for (;;) {
        if (2 * steps > kStepCap)
            throw NumericalError("tilde_u_window: step doubling exceeded 2^18");
        CMatrix fine = run_midpoint(params, sched, energy, t0, t1, 2 * steps);
        const double diff = spectral_norm(fine - coarse, 1e-6);
        coarse = std::move(fine);
        steps *= 2;
        if (diff < config.tolerance) break;
    }
    return coarse;
}

CMatrix tilde_u(const IsingParams& params, const SigmoidSchedule& sched,
                const EvolutionConfig& config) {
    return tilde_u_window(params, sched, 0.0, sched.T, config);
}

std::vector<BoundReport> duhamel_check(const IsingParams& params,
                                       const SigmoidSchedule& sched,
                                       const EvolutionConfig& config,
                                       const std::string& instance) {
    const int n = params.graph.n;
    if (n > 8) throw std::invalid_argument("duhamel_check: n outside 1..8");
    const auto ints = integrals(sched);
    const double hi = exact_hi_norm(params);
    const double k_norm = exact_commutator_norm(params);
    const double rhs = ints.eta * hi + k_norm * ints.beta * ints.delta_alpha;

    const CMatrix target =
        interaction_evolution(params, sched, energy_table(params), sched.T, ints.beta);
    const double split = sched.T - sched.delta;

    // U~(T) = U~_2 U~_1 exactly, so the two window runs also give the full
    // evolution.
    const CMatrix u_early = tilde_u_window(params, sched, 0.0, split, config);
    const CMatrix u_late = tilde_u_window(params, sched, split, sched.T, config);
    const Eigen::Index dim = u_early.rows();

    std::vector<BoundReport> out;
    out.push_back({"duhamel", spectral_norm(u_late * u_early - target), rhs, instance});
    out.push_back({"duhamel-early",
                   spectral_norm(u_early - CMatrix::Identity(dim, dim)),
                   ints.eta * hi, instance});
    out.push_back({"duhamel-late", spectral_norm(u_late - target),
                   k_norm * ints.beta * ints.delta_alpha, instance});

    const CMatrix h_final = interaction_hamiltonian(params, sched, sched.T);
    double drift = 0;
    for (int i = 0; i <= 4; ++i) {
        const double t = split + (sched.delta * i) / 4.0;
        drift = std::max(drift,
                         spectral_norm(h_final - interaction_hamiltonian(params, sched, t)));
    }
    out.push_back({"duhamel-drift", drift, k_norm * ints.delta_alpha, instance});

    // Looser chain with the schedule-level bounds of eta and delta_alpha.
    const double loose = 0.5 * std::numbers::ln2 * (sched.mu / ints.kappa) *
                         (sched.B0 * hi + k_norm * ints.beta * sched.A0);
    out.push_back({"duhamel-schedule-bound", out.front().lhs, loose, instance});
    return out;
}

BoundReport tv_bound_check(const IsingParams& params, const SigmoidSchedule& sched,
                            const MeasurementAngles& theta, const EvolutionConfig& config,
                            const std::string& instance) {
    const int n = params.graph.n;
    if (n > 10) throw std::invalid_argument("tv_bound_check: n outside 1..10");
    const auto ints = integrals(sched);
    const double hi = exact_hi_norm(params);
    const double k_norm = exact_commutator_norm(params);
    const double rhs = ints.eta * hi + k_norm * ints.beta * ints.delta_alpha;
    const Distribution dad = dadqc_run(params, sched, theta, config);
    const Distribution iqp =
        iqp_distribution(equivalent_iqp_for_dadqc(params, ints.beta, theta));
    return {"tv-bound", tv_distance(dad, iqp), rhs, instance};
}

std::vector<BoundReport> tv_bound_check_dense(const IsingParams& params,
                                      const SigmoidSchedule& sched,
                                      const MeasurementAngles& theta,
                                      const EvolutionConfig& config,
                                      const TvBoundOptions& options,
                                      const std::string& instance) {
    std::vector<BoundReport> out;
    out.push_back(tv_bound_check(params, sched, theta, config, instance));
    if (!options.operator_rows) return out;

    const int n = params.graph.n;
    if (n > 8) throw std::invalid_argument("tv_bound_check_dense: operator rows need n <= 8");
    const auto ints = integrals(sched);
    const CMatrix had = dense_hadamard_all(n);
    const CMatrix u_r = had * dense_rz_layer(theta.theta);
    const CMatrix u_l = dense_gx(n, -ints.alpha_T) * had;
    const CMatrix u_tot = u_r * densify_analog(params, sched, config) * u_l;
    const CMatrix u_iqp = u_r * dense_diagonal_phase(params, ints.beta) * had;
    const double op_dist = spectral_norm(u_tot - u_iqp);
    out.push_back({"tv-bound-operator", op_dist, out.front().rhs, instance});
    out.push_back({"tv-bound-data-processing", out.front().lhs, op_dist, instance});
    return out;
}

std::vector<BoundReport> perturbation_check(const IsingParams& params,
                                            const std::vector<double>& dh,
                                            const std::vector<double>& dJ, double beta,
                                            const std::string& instance) {
    const int n = params.graph.n;
    if (n > 8) throw std::invalid_argument("perturbation_check: n outside 1..8");
    if (dh.size() != params.h.size() || dJ.size() != params.J.size())
        throw std::invalid_argument("perturbation_check: perturbation size mismatch");
    const std::size_t m = params.graph.edges.size();

    const auto base = energy_table(params);
    const auto delta = energy_table(n, dh, params.graph.edges, dJ);
    const Eigen::Index dim = Eigen::Index(1) << n;
    CMatrix diff = CMatrix::Zero(dim, dim);
    double dh_norm = 0;  // |Delta H'| for the diagonal perturbation
    for (Eigen::Index x = 0; x < dim; ++x) {
        const double scaled = beta * base[x];
        diff(x, x) = std::polar(1.0, -(scaled + delta[x])) - std::polar(1.0, -scaled);
        dh_norm = std::max(dh_norm, std::abs(delta[x]));
    }
    const double unitary_dist = spectral_norm(diff);
    const double l1 = perturbation_bound(dh, dJ);
    double delta_par = 0;
    for (const double v : dh) delta_par = std::max(delta_par, std::abs(v));
    for (const double v : dJ) delta_par = std::max(delta_par, std::abs(v));

    std::vector<BoundReport> out;
    out.push_back({"perturbation-unitary", unitary_dist, dh_norm, instance});
    out.push_back({"perturbation-hamiltonian", dh_norm, l1, instance});
    out.push_back({"perturbation-ledger", l1,
                   static_cast<double>(n + m) * delta_par, instance});
    return out;
}

}  // namespace dadqc
