#include "dadqc/iqp.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dadqc {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

void check_circuit(const IQPCircuit& c) {
    if (c.v.size() != static_cast<std::size_t>(c.graph.n))
        throw std::invalid_argument("IQPCircuit: v size != vertex count");
    if (c.w.size() != c.graph.edges.size())
        throw std::invalid_argument("IQPCircuit: w size != edge count");
    if (c.theta && c.theta->theta.size() != static_cast<std::size_t>(c.graph.n))
        throw std::invalid_argument("IQPCircuit: theta size != vertex count");
}

}  // namespace

std::vector<double> IQPCircuit::effective_v() const {
    std::vector<double> out = v;
    if (theta) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += 0.5 * theta->theta[i];
    }
    return out;
}

void fwht(std::span<Complex> a) {
    const std::size_t dim = a.size();
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("fwht: length must be a power of two");
    for (std::size_t len = 1; len < dim; len <<= 1) {
        for (std::size_t block = 0; block < dim; block += 2 * len) {
            for (std::size_t i = block; i < block + len; ++i) {
                const Complex x = a[i];
                const Complex y = a[i + len];
                a[i] = x + y;
                a[i + len] = x - y;
            }
        }
    }
}

std::vector<double> phase_table(const IQPCircuit& circuit) {
    check_circuit(circuit);
    return energy_table(circuit.graph.n, circuit.effective_v(), circuit.graph.edges,
                        circuit.w);
}

Distribution iqp_distribution(const IQPCircuit& circuit) {
    check_circuit(circuit);
    const int n = circuit.graph.n;
    if (n < 1 || n > 24) throw std::invalid_argument("iqp_distribution: n outside 1..24");
    const auto phi = phase_table(circuit);
    std::vector<Complex> amp(phi.size());
    for (std::size_t x = 0; x < phi.size(); ++x) amp[x] = std::polar(1.0, -phi[x]);
    fwht(amp);
    Distribution d;
    d.n = n;
    d.p.resize(amp.size());
    const double scale = std::ldexp(1.0, -2 * n);  // 4^{-n}
    for (std::size_t s = 0; s < amp.size(); ++s) d.p[s] = std::norm(amp[s]) * scale;
    return d;
}

Complex partition_function(const IQPCircuit& circuit, std::uint64_t s) {
    check_circuit(circuit);
    const int n = circuit.graph.n;
    if (n < 1 || n > 20)
        throw std::invalid_argument("partition_function: n outside 1..20");
    if (s >= (1ull << n)) throw std::invalid_argument("partition_function: s outside 2^n");
    const auto phi = phase_table(circuit);
    Complex acc(0, 0);
    for (std::uint64_t x = 0; x < phi.size(); ++x) {
        const double sign = (std::popcount(x & s) & 1) ? -1.0 : 1.0;
        acc += sign * std::polar(1.0, -phi[x]);
    }
    return acc;
}

CzReport cz_decomposition_check(const InteractionGraph& graph) {
    const int n = graph.n;
    if (n < 1 || n > 10)
        throw std::invalid_argument("cz_decomposition_check: n outside 1..10");
    CzReport report;

    // Single-edge identity on two qubits:
    // CZ = e^{-i pi/4} e^{i pi/4 Z_i} e^{i pi/4 Z_j} e^{-i pi/4 Z_i Z_j}.
    for (int bi = 0; bi < 2; ++bi) {
        for (int bj = 0; bj < 2; ++bj) {
            const double zi = bi ? -1.0 : 1.0;
            const double zj = bj ? -1.0 : 1.0;
            const Complex rhs = std::polar(1.0, -kPi / 4) * std::polar(1.0, kPi / 4 * zi) *
                                std::polar(1.0, kPi / 4 * zj) *
                                std::polar(1.0, -kPi / 4 * zi * zj);
            const Complex cz = (bi == 1 && bj == 1) ? Complex(-1, 0) : Complex(1, 0);
            report.single_edge_deviation =
                std::max(report.single_edge_deviation, std::abs(cz - rhs));
        }
    }

    // Full product identity on the graph; every factor is Z-diagonal, so the
    // comparison runs over diagonal entries.
    const auto deg = graph.vertex_degrees();
    const double edge_count = static_cast<double>(graph.edges.size());
    const std::uint64_t dim = 1ull << n;
    for (std::uint64_t x = 0; x < dim; ++x) {
        double zz_sum = 0;
        bool cz_sign = false;
        for (const auto& [u, v] : graph.edges) {
            const bool bu = (x >> u) & 1ull;
            const bool bv = (x >> v) & 1ull;
            zz_sum += (bu == bv) ? 1.0 : -1.0;
            cz_sign ^= (bu && bv);
        }
        double z_deg = 0;
        for (int i = 0; i < n; ++i) {
            z_deg += deg[i] * (((x >> i) & 1ull) ? -1.0 : 1.0);
        }
        const Complex lhs = std::polar(1.0, -kPi / 4 * zz_sum);
        const Complex rhs = std::polar(1.0, kPi / 4 * edge_count) *
                            std::polar(1.0, -kPi / 4 * z_deg) *
                            (cz_sign ? Complex(-1, 0) : Complex(1, 0));
        report.product_deviation = std::max(report.product_deviation, std::abs(lhs - rhs));
    }
    return report;
}

IQPCircuit equivalent_iqp_for_dadqc(const IsingParams& params, double beta,
                                    const MeasurementAngles& theta) {
    IQPCircuit c;
    c.graph = params.graph;
    c.v.resize(params.h.size());
    c.w.resize(params.J.size());
    for (std::size_t i = 0; i < params.h.size(); ++i) c.v[i] = beta * params.h[i];
    for (std::size_t k = 0; k < params.J.size(); ++k) c.w[k] = beta * params.J[k];
    c.theta = theta;
    check_circuit(c);
    return c;
}

}  // namespace dadqc
