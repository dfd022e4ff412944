#include "dadqc/anticonc.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "dadqc/error.hpp"

namespace dadqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Sample mean and standard error (sample standard deviation / sqrt(N)).
std::pair<double, double> mean_se(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    if (n == 0) return {0.0, 0.0};
    double mean = 0;
    for (const double x : xs) mean += x;
    mean /= static_cast<double>(n);
    if (n == 1) return {mean, 0.0};
    double ss = 0;
    for (const double x : xs) ss += (x - mean) * (x - mean);
    const double var = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

void parallel_for_index(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

std::pair<InteractionGraph, MeasurementAngles> sample_instance(const EnsembleConfig& config,
                                                               int index) {
    const auto idx = static_cast<std::uint64_t>(index);
    InteractionGraph g;
    if (config.d == 0) {
        g.n = config.host.n;
        g.degree = 0;
        g.host_name = config.host.name;
    } else {
        const std::uint64_t steps =
            config.swap_steps > 0 ? config.swap_steps
                                  : default_swap_steps(config.host, config.d);
        g = sample_d_factor(config.host, config.d, derive_seed(config.seed, 2 * idx),
                            steps);
    }
    const MeasurementAngles theta =
        MeasurementAngles::random(config.host.n, derive_seed(config.seed, 2 * idx + 1));
    return {std::move(g), theta};
}

Distribution instance_distribution(const EnsembleConfig& config, const InteractionGraph& g,
                                   const MeasurementAngles& theta) {
    IQPCircuit circuit;
    circuit.graph = g;
    circuit.v = config.fixed_v.empty() ? std::vector<double>(g.n, 0.0) : config.fixed_v;
    if (circuit.v.size() != static_cast<std::size_t>(g.n))
        throw std::invalid_argument("EnsembleConfig: fixed_v size != n");
    circuit.w.assign(g.edges.size(), kPi / 4.0);
    circuit.theta = theta;
    return iqp_distribution(circuit);
}

double MomentReport::pz_bound(std::size_t target) const {
    if (target >= mean_p.size() || mean_p2[target] <= 0) return 0.0;
    return 0.25 * mean_p[target] * mean_p[target] / mean_p2[target];
}

std::vector<InstanceMoments> instance_moments(const EnsembleConfig& config) {
    if (config.instances < 1)
        throw std::invalid_argument("instance_moments: instances must be >= 1");
    const int n = config.host.n;
    if (n > 20) throw std::invalid_argument("instance_moments: n outside 1..20");
    const std::size_t targets = config.target_strings.size();
    for (const auto s : config.target_strings) {
        if (s >= (1ull << n))
            throw std::invalid_argument("instance_moments: target_s outside 2^n");
    }

    std::vector<InstanceMoments> rows(config.instances);
    parallel_for_index(config.instances, config.threads, [&](int i) {
        const auto [g, theta] = sample_instance(config, i);
        const Distribution dist = instance_distribution(config, g, theta);
        InstanceMoments row;
        row.index = i;
        row.graph_hash = g.hash();
        double sum_sq = 0;
        for (const double p : dist.p) sum_sq += p * p;
        row.m2 = std::ldexp(sum_sq, n);  // 2^n sum_s p^2
        row.p.resize(targets);
        for (std::size_t t = 0; t < targets; ++t) {
            row.p[t] = dist.p[config.target_strings[t]];
        }
        rows[i] = std::move(row);
    });
    return rows;
}

MomentReport summarize(const EnsembleConfig& config,
                       const std::vector<InstanceMoments>& rows) {
    const int n = config.host.n;
    const std::size_t targets = config.target_strings.size();
    MomentReport report;
    report.instances = static_cast<int>(rows.size());
    report.n = n;
    const double threshold = 0.5 * std::ldexp(1.0, -n);
    std::vector<double> scratch(rows.size());
    for (std::size_t t = 0; t < targets; ++t) {
        for (std::size_t i = 0; i < rows.size(); ++i) scratch[i] = rows[i].p[t];
        const auto [mp, mp_se] = mean_se(scratch);
        report.mean_p.push_back(mp);
        report.mean_p_se.push_back(mp_se);
        for (auto& v : scratch) v *= v;
        const auto [mp2, mp2_se] = mean_se(scratch);
        report.mean_p2.push_back(mp2);
        report.mean_p2_se.push_back(mp2_se);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            scratch[i] = rows[i].p[t] >= threshold ? 1.0 : 0.0;
        }
        const auto [f, f_se] = mean_se(scratch);
        report.pz_fraction.push_back(f);
        report.pz_fraction_se.push_back(f_se);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) scratch[i] = rows[i].m2;
    const auto [m2, m2_se] = mean_se(scratch);
    report.m2_mean = m2;
    report.m2_se = m2_se;
    return report;
}

MomentReport moment_scan(const EnsembleConfig& config) {
    return summarize(config, instance_moments(config));
}

MomentReport first_moment(const EnsembleConfig& config) { return moment_scan(config); }

MomentReport second_moment(const EnsembleConfig& config) {
    if (config.host.n > 16) throw std::invalid_argument("second_moment: n outside 1..16");
    return moment_scan(config);
}

MomentReport paley_zygmund_fraction(const EnsembleConfig& config) {
    if (config.host.n > 16)
        throw std::invalid_argument("paley_zygmund_fraction: n outside 1..16");
    return moment_scan(config);
}

CalibrationResult calibrate_scaled_angles(const InteractionGraph& g,
                                          const std::vector<double>& scaled_h,
                                          const std::vector<double>& scaled_J, double eps,
                                          double A0, double B0, double T, double delta) {
    if (scaled_h.size() != static_cast<std::size_t>(g.n) ||
        scaled_J.size() != g.edges.size())
        throw std::invalid_argument("calibrate_scaled_angles: angle count mismatch");
    const bool exact = g.n <= 12;

    auto params_at = [&](double beta) {
        std::vector<double> h(scaled_h.size()), J(scaled_J.size());
        double h_cap = 3.15, j_cap = 3.15;
        for (std::size_t i = 0; i < h.size(); ++i) {
            h[i] = scaled_h[i] / beta;
            h_cap = std::max(h_cap, std::abs(h[i]));
        }
        for (std::size_t k = 0; k < J.size(); ++k) {
            J[k] = scaled_J[k] / beta;
            j_cap = std::max(j_cap, std::abs(J[k]));
        }
        return IsingParams::create(g, std::move(h), std::move(J), h_cap, j_cap);
    };
    auto norms_of = [&](const IsingParams& p) -> std::pair<double, double> {
        if (exact) return {exact_hi_norm(p), exact_commutator_norm(p)};
        const auto b = norm_bounds(p);
        return {b.hi_bound, b.k_bound};
    };

    CalibrationResult out;
    out.exact_norms = exact;
    double mu = delta / 10.0;
    bool converged = false;
    for (int it = 1; it <= 60; ++it) {
        const auto sched = SigmoidSchedule::create(A0, B0, T, delta, mu);
        const double beta = integrals(sched).beta;
        const IsingParams params = params_at(beta);
        const auto [hi, k_norm] = norms_of(params);
        const MuSolution sol = solve_mu(eps, hi, k_norm, A0, B0, T, delta);
        if (sol.unconstrained)
            throw std::invalid_argument("calibrate_scaled_angles: zero budget denominator");
        out.iterations = it;
        if (std::abs(sol.mu - mu) <= 1e-10 * mu) {
            mu = sol.mu;
            converged = true;
            break;
        }
        mu = sol.mu;
    }
    if (!converged)
        throw NumericalError("calibrate_scaled_angles: calibration fixed point stalled");

    out.mu = mu;
    out.sched = SigmoidSchedule::create(A0, B0, T, delta, mu);
    const auto ints = integrals(out.sched);
    out.beta = ints.beta;
    out.params = params_at(out.beta);
    const auto [hi, k_norm] = norms_of(out.params);
    out.hi_norm = hi;
    out.k_norm = k_norm;
    out.budget = ints.eta * hi + k_norm * ints.beta * ints.delta_alpha;
    return out;
}

SupremacyRecord run_supremacy_instance(const EnsembleConfig& config,
                                       const SupremacyOptions& options, int index) {
    if (config.d < 3)
        throw std::invalid_argument(
            "supremacy pipeline requires d >= 3; graph states on d <= 2 factors have "
            "bounded treewidth and are classically simulable");
    const int n = config.host.n;
    if (n > 10) throw std::invalid_argument("run_supremacy_instance: n outside 1..10");

    const auto [g, theta] = sample_instance(config, index);
    const std::vector<double> scaled_h(g.n, 0.0);
    const std::vector<double> scaled_J(g.edges.size(), kPi / 4.0);
    const CalibrationResult cal =
        calibrate_scaled_angles(g, scaled_h, scaled_J, options.eps, options.A0,
                                options.B0, options.T, options.delta);

    SupremacyRecord rec;
    rec.index = index;
    rec.graph_hash = g.hash();
    rec.mu = cal.mu;
    rec.beta = cal.beta;
    rec.hi_norm = cal.hi_norm;
    rec.k_norm = cal.k_norm;
    rec.budget = cal.budget;

    const Distribution dad = dadqc_run(cal.params, cal.sched, theta, options.evolution);
    const Distribution iqp =
        iqp_distribution(equivalent_iqp_for_dadqc(cal.params, cal.beta, theta));
    rec.tv = tv_distance(dad, iqp);
    rec.pass = rec.tv <= options.eps / 2.0;
    return rec;
}

std::vector<SupremacyRecord> run_supremacy_ensemble(const EnsembleConfig& config,
                                                    const SupremacyOptions& options) {
    std::vector<SupremacyRecord> records(config.instances);
    parallel_for_index(config.instances, config.threads, [&](int i) {
        records[i] = run_supremacy_instance(config, options, i);
    });
    return records;
}

}  // namespace dadqc
