#include "dadqc/dense.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dadqc/error.hpp"
#include "dadqc/rng.hpp"

namespace dadqc {

namespace {

using Complex = std::complex<double>;

void check_dense_n(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("dense operator: n outside 1..10");
}

}  // namespace

CMatrix dense_hx(int n) {
    check_dense_n(n);
    const Eigen::Index dim = Eigen::Index(1) << n;
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (int b = 0; b < n; ++b) m(x, x ^ (Eigen::Index(1) << b)) = Complex(1, 0);
    }
    return m;
}

CMatrix dense_hi(const IsingParams& params) {
    check_dense_n(params.graph.n);
    const auto table = energy_table(params);
    CMatrix m = CMatrix::Zero(table.size(), table.size());
    for (std::size_t x = 0; x < table.size(); ++x) m(x, x) = Complex(table[x], 0);
    return m;
}

CMatrix dense_gx(int n, double angle) {
    check_dense_n(n);
    // (e^{-i angle X})^{x n}: entry (x, y) = cos^(n-d) * (-i sin)^d with
    // d = Hamming distance between x and y.
    const Eigen::Index dim = Eigen::Index(1) << n;
    const double c = std::cos(angle);
    const Complex mis(0, -std::sin(angle));
    std::vector<Complex> by_distance(n + 1);
    for (int d = 0; d <= n; ++d) {
        Complex v(1, 0);
        for (int k = 0; k < d; ++k) v *= mis;
        for (int k = d; k < n; ++k) v *= c;
        by_distance[d] = v;
    }
    CMatrix m(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (Eigen::Index y = 0; y < dim; ++y) {
            m(x, y) = by_distance[std::popcount(static_cast<std::uint64_t>(x ^ y))];
        }
    }
    return m;
}

CMatrix dense_hadamard_all(int n) {
    check_dense_n(n);
    const Eigen::Index dim = Eigen::Index(1) << n;
    const double scale = std::pow(2.0, -0.5 * n);
    CMatrix m(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (Eigen::Index y = 0; y < dim; ++y) {
            const bool neg = std::popcount(static_cast<std::uint64_t>(x & y)) & 1;
            m(x, y) = Complex(neg ? -scale : scale, 0);
        }
    }
    return m;
}

CMatrix dense_rz_layer(const std::vector<double>& theta) {
    const int n = static_cast<int>(theta.size());
    check_dense_n(n);
    const Eigen::Index dim = Eigen::Index(1) << n;
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        double phase = 0;
        for (int i = 0; i < n; ++i) {
            const double z = ((x >> i) & 1) ? -1.0 : 1.0;
            phase += -0.5 * theta[i] * z;
        }
        m(x, x) = std::polar(1.0, phase);
    }
    return m;
}

CMatrix dense_diagonal_phase(const IsingParams& params, double scale) {
    check_dense_n(params.graph.n);
    const auto table = energy_table(params);
    CMatrix m = CMatrix::Zero(table.size(), table.size());
    for (std::size_t x = 0; x < table.size(); ++x) {
        m(x, x) = std::polar(1.0, -scale * table[x]);
    }
    return m;
}

CMatrix hermitian_evolution(const CMatrix& h, double scale) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) {
        // The QL iteration can stall on rotated degenerate spectra; fall back
        // to scaling-and-squaring.
        return CMatrix(Complex(0, -scale) * h).exp();
    }
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    CVector phases(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        phases(i) = std::polar(1.0, -scale * vals(i));
    }
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

double spectral_norm_svd(const CMatrix& m) {
    if (m.rows() <= 256) {
        Eigen::JacobiSVD<CMatrix> svd(m);
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double spectral_norm(const CMatrix& m, double rel_tol) {
    if (m.size() == 0) return 0.0;
    const Eigen::Index cols = m.cols();
    CounterRng rng(RandomSeed{0xa11ce}, 11);
    CVector v(cols);
    for (Eigen::Index i = 0; i < cols; ++i) {
        v(i) = Complex(rng.next_symmetric(1.0), rng.next_symmetric(1.0));
    }
    double vn = v.norm();
    if (vn == 0) {
        v(0) = Complex(1, 0);
        vn = 1;
    }
    v /= vn;
    // Difference-of-unitary spectra are often clustered at the top, where
    // power iteration stalls; hand those to the full decomposition quickly.
    for (int it = 0; it < 300; ++it) {
        const CVector w = m * v;
        const CVector u = m.adjoint() * w;  // M^dag M v
        const double lambda = w.squaredNorm();
        const double resid = (u - lambda * v).norm();
        if (resid <= rel_tol * std::max(lambda, 1e-300)) {
            return std::sqrt(std::max(lambda, 0.0));
        }
        const double un = u.norm();
        if (un == 0) return 0.0;
        v = u / un;
    }
    return spectral_norm_svd(m);
}

namespace {

void mat_x_rotation(CMatrix& m, int n, double angle) {
    const double c = std::cos(angle);
    const Complex mis(0, -std::sin(angle));
    const Eigen::Index dim = m.rows();
    for (int q = 0; q < n; ++q) {
        const Eigen::Index bit = Eigen::Index(1) << q;
        for (Eigen::Index x = 0; x < dim; ++x) {
            if (x & bit) continue;
            for (Eigen::Index col = 0; col < m.cols(); ++col) {
                const Complex a0 = m(x, col);
                const Complex a1 = m(x | bit, col);
                m(x, col) = c * a0 + mis * a1;
                m(x | bit, col) = mis * a0 + c * a1;
            }
        }
    }
}

void mat_diagonal_phase(CMatrix& m, const std::vector<double>& energy, double scale) {
    for (Eigen::Index x = 0; x < m.rows(); ++x) {
        const Complex ph = std::polar(1.0, -scale * energy[x]);
        m.row(x) *= ph;
    }
}

CMatrix run_strang_dense(const IsingParams& params, const SigmoidSchedule& sched,
                         const std::vector<double>& energy, std::uint64_t steps) {
    const int n = params.graph.n;
    const Eigen::Index dim = Eigen::Index(1) << n;
    CMatrix u = CMatrix::Identity(dim, dim);
    for (std::uint64_t k = 0; k < steps; ++k) {
        const double t0 = sched.T * (static_cast<double>(k) / steps);
        const double tm = sched.T * ((static_cast<double>(k) + 0.5) / steps);
        const double t1 = sched.T * (static_cast<double>(k + 1) / steps);
        mat_x_rotation(u, n, sched.a_integral(t0, tm));
        mat_diagonal_phase(u, energy, sched.b_integral(t0, t1));
        mat_x_rotation(u, n, sched.a_integral(tm, t1));
    }
    return u;
}

}  // namespace

CMatrix densify_analog(const IsingParams& params, const SigmoidSchedule& sched,
                       const EvolutionConfig& config) {
    check_dense_n(params.graph.n);
    if (config.steps < 1) throw std::invalid_argument("densify_analog: steps must be >= 1");
    const auto energy = energy_table(params);
    if (!config.adaptive) return run_strang_dense(params, sched, energy, config.steps);
    constexpr std::uint64_t kStepCap = 1ull << 22;
    std::uint64_t steps = config.steps;
    CMatrix coarse = run_strang_dense(params, sched, energy, steps);
    for (;;) {
        if (2 * steps > kStepCap)
            throw NumericalError("densify_analog: adaptive refinement exceeded 2^22 steps");
        CMatrix fine = run_strang_dense(params, sched, energy, 2 * steps);
        const double diff = (fine - coarse).norm();  // Frobenius, >= spectral
        coarse = std::move(fine);
        steps *= 2;
        if (diff < config.tolerance) break;
    }
    return coarse;
}

}  // namespace dadqc
