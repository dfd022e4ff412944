#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dadqc/distribution.hpp"
#include "dadqc/evolution.hpp"
#include "dadqc/graph.hpp"
#include "dadqc/ising.hpp"

namespace dadqc {

// Hadamard sandwich around a Z-diagonal phase layer: one-qubit angles v_i,
// two-qubit angles w_ij on the interaction graph. An attached theta layer is
// equivalent to shifting v_i by theta_i/2.
struct IQPCircuit {
    InteractionGraph graph;
    std::vector<double> v;  // per vertex
    std::vector<double> w;  // aligned with graph.edges
    std::optional<MeasurementAngles> theta;

    int n() const { return graph.n; }
    std::vector<double> effective_v() const;  // v_i + theta_i/2
};

// In-place unnormalized Walsh-Hadamard transform; applying it twice yields
// 2^n times the input.
void fwht(std::span<std::complex<double>> a);

// Diagonal phases phi(x) = sum_i (v_i + theta_i/2) z_i + sum_{ij} w_ij z_i z_j.
std::vector<double> phase_table(const IQPCircuit& circuit);

// P(s) = |<s| U_IQP |0^n>|^2 with a_s = 2^{-n} sum_x e^{-i phi(x)} (-1)^{s.x},
// evaluated by fast Walsh-Hadamard in O(n 2^n). n <= 24.
Distribution iqp_distribution(const IQPCircuit& circuit);

// Z(s) = sum_x e^{-i phi(x)} (-1)^{s.x}; P(s) = 4^{-n} |Z(s)|^2. n <= 20.
std::complex<double> partition_function(const IQPCircuit& circuit, std::uint64_t s);

// Verifies prod e^{-i pi/4 Z_i Z_j} = e^{i pi |E|/4} (prod_i e^{-i pi/4 deg(i) Z_i})
// prod CZ_ij together with the single-edge CZ identity; reports max entry
// deviations. n <= 10.
struct CzReport {
    double product_deviation = 0;
    double single_edge_deviation = 0;
};

CzReport cz_decomposition_check(const InteractionGraph& graph);

// IQP target of a DADQC run: v_i = beta*h_i, w_ij = beta*J_ij, theta attached.
IQPCircuit equivalent_iqp_for_dadqc(const IsingParams& params, double beta,
                                    const MeasurementAngles& theta);

}  // namespace dadqc
