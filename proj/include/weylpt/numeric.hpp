#pragma once

#include "weylpt/hermitian.hpp"
#include "weylpt/qsolve.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace weylpt {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Truncated number-basis matrix of a Scaled-convention polynomial, with
// X = (2M)^{-1/2}(a + a^dag) and P = i(M/2)^{1/2}(a^dag - a). Each T[r,s] is
// assembled by the anticommutator recursion T[r,s] = (1/2){P, T[r-1,s]} at a
// padded dimension and truncated, so every returned entry is exact up to
// rounding. Real-coefficient operators are verified to come out Hermitian.
CMatrix matrixize(const OperatorPoly& op, int dim, double M);

// sum_k eps^k * matrixize(coeffs[k]).
CMatrix matrixize(const PerturbationSeries& series, double eps, int dim, double M);

// Dense matrix of H0 + eps H1 + eps^2 H2.
CMatrix hamiltonian_matrix(double eps, int dim, double M);

// Lowest `levels` eigenvalues of the truncated H by real part. Convergence of
// the truncation is measured against a dim+20 solve of the same operator.
struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues;
    double eps = 0.0;
    double M = 1.0;
    int dim = 0;
    double truncation_shift = 0.0;  // max |lambda(dim) - lambda(dim+20)|
    bool converged = false;         // truncation_shift < 1e-8
};

SpectrumResult spectrum_H(double eps, int dim, double M, int levels);

// Residual Frobenius norms, on the interior (top-left dim/2) block, of the
// operator identities the generator hierarchy guarantees order by order:
// C = exp(Q) Parity squares to one, commutes with H, and exp(-Q) H exp(Q)
// equals H^dag. All shrink with the first neglected power of eps.
struct MetricReport {
    double eps = 0.0;
    double M = 1.0;
    int dim = 0;
    int q_orders = 0;                  // highest generator order included
    double c_square_defect = 0.0;      // ||C^2 - 1||
    double c_commutator_defect = 0.0;  // ||[C, H]||
    double pseudo_hermiticity_defect = 0.0;  // ||exp(-Q) H exp(Q) - H^dag||
};

MetricReport metric_checks(const QHierarchy& qh, double eps, int dim, double M);

// Interior-block norm of exp(-Q) O exp(Q) - O^dag for the corrected position
// or momentum observable through eps^obs_order.
double observable_pseudo_defect(ObservableKind which, const QHierarchy& qh, int obs_order, double eps,
                                int dim, double M);

// Uniform sample grid [x_min, x_max] with `points` nodes including endpoints.
struct GridSpec {
    double x_min = -10.0;
    double x_max = 10.0;
    int points = 2001;
};

struct GridFunction {
    double x_min = 0.0;
    double x_max = 0.0;
    std::vector<std::complex<double>> values;

    int points() const { return static_cast<int>(values.size()); }
    double spacing() const { return (x_max - x_min) / (points() - 1); }
    double x_at(int i) const { return x_min + spacing() * i; }
};

// Trapezoidal integral of |f|^2.
double norm_squared(const GridFunction& f);

// Harmonic eigenfunction psi_k(x) at physical parameters (mass, mu, hbar from
// `at`; the M entry is ignored), sampled on the grid via the stable Hermite
// function recurrence.
GridFunction basis_wavefunction(int k, const ParamPoint& at, const GridSpec& grid);

// Physical-basis wavefunction of the corrected level n through eps^order
// (order <= 3): the similarity factor exp(-Q/2) expanded to the requested
// order is applied to |n> in the number basis, then sampled in position space.
GridFunction physical_wavefunction(int n, double eps, const ParamPoint& at, int order,
                                   const GridSpec& grid);

// rho = |Psi|^2 / trapezoid norm: real, nonnegative, unit integral.
GridFunction probability_density(const GridFunction& psi);

}  // namespace weylpt
