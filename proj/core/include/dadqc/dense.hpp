#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dadqc/evolution.hpp"
#include "dadqc/ising.hpp"
#include "dadqc/schedule.hpp"

namespace dadqc {

// Dense 2^n x 2^n operators for small-n verification; guarded to n <= 10.
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

CMatrix dense_hx(int n);
CMatrix dense_hi(const IsingParams& params);

// tensor_j exp(-i*angle*X_j)
CMatrix dense_gx(int n, double angle);

CMatrix dense_hadamard_all(int n);
CMatrix dense_rz_layer(const std::vector<double>& theta);

// exp(-i*scale*H_I); diagonal.
CMatrix dense_diagonal_phase(const IsingParams& params, double scale);

// exp(-i*scale*H) for Hermitian H via eigendecomposition.
CMatrix hermitian_evolution(const CMatrix& h, double scale);

// Largest singular value: power iteration on M^dag M to relative rel_tol,
// falling back to a full decomposition if the iteration cap is reached.
double spectral_norm(const CMatrix& m, double rel_tol = 1e-10);

// Full-decomposition route, used as the fallback and as a test oracle.
double spectral_norm_svd(const CMatrix& m);

// Dense matrix of the analog block, built by running the same symmetric
// splitting as evolve_analog on all basis columns at once.
CMatrix densify_analog(const IsingParams& params, const SigmoidSchedule& sched,
                       const EvolutionConfig& config);

}  // namespace dadqc
