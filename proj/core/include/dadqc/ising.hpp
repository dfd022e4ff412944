#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dadqc/graph.hpp"

namespace dadqc {

// H_I = sum_i h_i Z_i + sum_{(i,j)} J_ij Z_i Z_j on an interaction graph.
// Coefficients are dimensionless; magnitude caps are declared per experiment.
struct IsingParams {
    InteractionGraph graph;
    std::vector<double> h;  // per vertex
    std::vector<double> J;  // aligned with graph.edges
    double h_max = 0;
    double J_max = 0;

    static IsingParams create(InteractionGraph graph, std::vector<double> h,
                              std::vector<double> J);
    static IsingParams create(InteractionGraph graph, std::vector<double> h,
                              std::vector<double> J, double h_max, double J_max);
};

struct NormBounds {
    double hi_bound = 0;  // sum |h_i| + sum |J_ij|  >= |H_I|
    double k_bound = 0;   // 2 sum |h_i| + 4 sum |J_ij|  >= |[H_X, H_I]|
    std::optional<double> hi_exact;
    std::optional<double> k_exact;
};

NormBounds norm_bounds(const IsingParams& params);

// Diagonal energies E(z) for all 2^n bitstrings, z_i = +1 for bit 0 and -1
// for bit 1 (bit i of the index is qubit i). Gray-code walk, O(2^n * deg).
std::vector<double> energy_table(int n, const std::vector<double>& h,
                                 const std::vector<Edge>& edges,
                                 const std::vector<double>& J);
std::vector<double> energy_table(const IsingParams& params);

// |H_I| = max_z |E(z)|; H_I is Z-diagonal. Guarded to n <= 24.
double exact_hi_norm(const IsingParams& params);

// Spectral norm of [H_X, H_I]; entries (x, x^bit) equal E(x^bit) - E(x).
// Guarded to n <= 12.
double exact_commutator_norm(const IsingParams& params);

// Scaled angles beta*h_i, beta*J_ij wrapped into [0, pi) and rounded to the
// nearest k*pi/8 (ties toward the smaller grid index).
struct AngleAssignment {
    std::vector<double> scaled_h;
    std::vector<double> scaled_J;
    double max_residual = 0;
};

AngleAssignment snap_to_grid(const IsingParams& params, double beta);

// beta*J_ij = pi/4 on factor edges, h = 0: the graph-state entangler choice.
IsingParams graph_state_calibration(const InteractionGraph& graph, double beta);

// sum |dh_i| + sum |dJ_ij|; dominates both the perturbed-Hamiltonian norm and
// the induced unitary deviation.
double perturbation_bound(std::span<const double> dh, std::span<const double> dJ);

}  // namespace dadqc
