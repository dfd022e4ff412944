#include "dadqc/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "dadqc/error.hpp"
#include "dadqc/rng.hpp"

namespace dadqc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(const IsingParams& p) {
    if (p.h.size() != static_cast<std::size_t>(p.graph.n))
        throw std::invalid_argument("IsingParams: h size != vertex count");
    if (p.J.size() != p.graph.edges.size())
        throw std::invalid_argument("IsingParams: J size != edge count");
}

}  // namespace

IsingParams IsingParams::create(InteractionGraph graph, std::vector<double> h,
                                std::vector<double> J) {
    return create(std::move(graph), std::move(h), std::move(J), kPi, kPi);
}

IsingParams IsingParams::create(InteractionGraph graph, std::vector<double> h,
                                std::vector<double> J, double h_max, double J_max) {
    IsingParams p;
    p.graph = std::move(graph);
    p.h = std::move(h);
    p.J = std::move(J);
    p.h_max = h_max;
    p.J_max = J_max;
    check_sizes(p);
    for (const double v : p.h) {
        if (std::abs(v) > h_max * (1 + 1e-12))
            throw std::invalid_argument("IsingParams: |h_i| exceeds declared h_max");
    }
    for (const double v : p.J) {
        if (std::abs(v) > J_max * (1 + 1e-12))
            throw std::invalid_argument("IsingParams: |J_ij| exceeds declared J_max");
    }
    return p;
}

NormBounds norm_bounds(const IsingParams& params) {
    check_sizes(params);
    double sum_h = 0, sum_j = 0;
    for (const double v : params.h) sum_h += std::abs(v);
    for (const double v : params.J) sum_j += std::abs(v);
    NormBounds b;
    b.hi_bound = sum_h + sum_j;
    b.k_bound = 2.0 * sum_h + 4.0 * sum_j;
    return b;
}

std::vector<double> energy_table(int n, const std::vector<double>& h,
                                 const std::vector<Edge>& edges,
                                 const std::vector<double>& J) {
    if (n < 1 || n > 24) throw std::invalid_argument("energy_table: n outside 1..24");
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    double e = 0;
    for (const double v : h) e += v;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        adj[edges[k].first].emplace_back(edges[k].second, J[k]);
        adj[edges[k].second].emplace_back(edges[k].first, J[k]);
        e += J[k];
    }
    const std::uint64_t dim = 1ull << n;
    std::vector<double> table(dim);
    table[0] = e;
    std::uint64_t x = 0;
    for (std::uint64_t k = 1; k < dim; ++k) {
        const int b = std::countr_zero(k);
        const double zb = ((x >> b) & 1ull) ? -1.0 : 1.0;
        double local = h[b];
        for (const auto& [j, jv] : adj[b]) {
            local += jv * (((x >> j) & 1ull) ? -1.0 : 1.0);
        }
        e -= 2.0 * zb * local;
        x ^= 1ull << b;
        table[x] = e;
    }
    return table;
}

std::vector<double> energy_table(const IsingParams& params) {
    check_sizes(params);
    return energy_table(params.graph.n, params.h, params.graph.edges, params.J);
}

double exact_hi_norm(const IsingParams& params) {
    check_sizes(params);
    const int n = params.graph.n;
    if (n < 1 || n > 24) throw std::invalid_argument("exact_hi_norm: n outside 1..24");
    // Same Gray-code walk as energy_table, tracking only the running maximum.
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    double e = 0;
    for (const double v : params.h) e += v;
    for (std::size_t k = 0; k < params.graph.edges.size(); ++k) {
        const auto& [u, v] = params.graph.edges[k];
        adj[u].emplace_back(v, params.J[k]);
        adj[v].emplace_back(u, params.J[k]);
        e += params.J[k];
    }
    double best = std::abs(e);
    const std::uint64_t dim = 1ull << n;
    std::uint64_t x = 0;
    for (std::uint64_t k = 1; k < dim; ++k) {
        const int b = std::countr_zero(k);
        const double zb = ((x >> b) & 1ull) ? -1.0 : 1.0;
        double local = params.h[b];
        for (const auto& [j, jv] : adj[b]) {
            local += jv * (((x >> j) & 1ull) ? -1.0 : 1.0);
        }
        e -= 2.0 * zb * local;
        x ^= 1ull << b;
        best = std::max(best, std::abs(e));
    }
    return best;
}

double exact_commutator_norm(const IsingParams& params) {
    check_sizes(params);
    const int n = params.graph.n;
    if (n < 1 || n > 12)
        throw std::invalid_argument("exact_commutator_norm: n outside 1..12");
    const auto table = energy_table(params);
    const std::uint64_t dim = 1ull << n;

    // C(x, x^b) = E(x^b) - E(x); C is real antisymmetric, so |C| is the
    // square root of the top eigenvalue of -C^2.
    auto apply_c = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (std::uint64_t x = 0; x < dim; ++x) {
            double acc = 0;
            for (int b = 0; b < n; ++b) {
                const std::uint64_t y = x ^ (1ull << b);
                acc += (table[y] - table[x]) * v[y];
            }
            out[x] = acc;
        }
    };

    CounterRng rng(RandomSeed{0x5eedc0de}, 7);
    std::vector<double> v(dim), w(dim), y(dim);
    double norm0 = 0;
    for (auto& a : v) {
        a = rng.next_symmetric(1.0);
        norm0 += a * a;
    }
    if (norm0 == 0) v[0] = 1.0;
    for (auto& a : v) a /= std::sqrt(norm0);

    double lambda = 0;
    for (int it = 0; it < 50000; ++it) {
        apply_c(v, w);
        apply_c(w, y);
        for (auto& a : y) a = -a;  // y = -C^2 v
        lambda = 0;
        for (std::uint64_t i = 0; i < dim; ++i) lambda += v[i] * y[i];
        double resid = 0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            const double r = y[i] - lambda * v[i];
            resid += r * r;
        }
        if (std::sqrt(resid) <= 1e-11 * std::max(lambda, 1e-300)) {
            return std::sqrt(std::max(lambda, 0.0));
        }
        double ny = 0;
        for (const auto& a : y) ny += a * a;
        if (ny == 0) return 0.0;
        ny = std::sqrt(ny);
        for (std::uint64_t i = 0; i < dim; ++i) v[i] = y[i] / ny;
    }
    throw NumericalError("exact_commutator_norm: power iteration did not converge");
}

AngleAssignment snap_to_grid(const IsingParams& params, double beta) {
    if (!(beta > 0)) throw std::invalid_argument("snap_to_grid: beta must be positive");
    check_sizes(params);
    const double step = kPi / 8.0;
    AngleAssignment out;
    out.max_residual = 0;
    auto snap = [&](double raw) {
        double w = std::fmod(raw, kPi);
        if (w < 0) w += kPi;
        int best_k = 0;
        double best_d = kPi;
        for (int k = 0; k < 8; ++k) {
            double d = std::abs(w - k * step);
            d = std::min(d, kPi - d);  // distance on the period-pi circle
            if (d < best_d) {
                best_d = d;
                best_k = k;
            }
        }
        out.max_residual = std::max(out.max_residual, best_d);
        return best_k * step;
    };
    out.scaled_h.reserve(params.h.size());
    out.scaled_J.reserve(params.J.size());
    for (const double v : params.h) out.scaled_h.push_back(snap(beta * v));
    for (const double v : params.J) out.scaled_J.push_back(snap(beta * v));
    return out;
}

IsingParams graph_state_calibration(const InteractionGraph& graph, double beta) {
    if (!(beta > 0))
        throw std::invalid_argument("graph_state_calibration: beta must be positive");
    const double j = kPi / (4.0 * beta);
    std::vector<double> h(graph.n, 0.0);
    std::vector<double> J(graph.edges.size(), j);
    return IsingParams::create(graph, std::move(h), std::move(J), kPi,
                               std::max(kPi, std::abs(j)));
}

double perturbation_bound(std::span<const double> dh, std::span<const double> dJ) {
    double sum = 0;
    for (const double v : dh) sum += std::abs(v);
    for (const double v : dJ) sum += std::abs(v);
    return sum;
}

}  // namespace dadqc
