#include "weylpt/numeric.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylpt {

namespace {

CMatrix ladder(int dim) {
    CMatrix a = CMatrix::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) a(n, n + 1) = std::sqrt(double(n + 1));
    return a;
}

// psi_k(x) for k = 0..kmax at physical parameters, one row per k. Stable
// two-term recurrence on the scaled coordinate; no factorials appear.
std::vector<std::vector<double>> hermite_table(int kmax, const ParamPoint& at, const GridSpec& grid) {
    if (grid.points < 2) throw std::invalid_argument("grid needs at least two points");
    if (!(grid.x_max > grid.x_min)) throw std::invalid_argument("grid bounds must satisfy x_min < x_max");
    if (!(at.mass > 0.0) || !(at.mu > 0.0) || !(at.hbar > 0.0))
        throw std::invalid_argument("mass, mu and hbar must be positive");

    // Ground state exp(-sqrt(mass)*mu*x^2/(2 hbar)): alpha is the inverse width.
    const double alpha = std::pow(at.mass * at.mu * at.mu / (at.hbar * at.hbar), 0.25);
    const double dx = (grid.x_max - grid.x_min) / (grid.points - 1);
    std::vector<std::vector<double>> h(kmax + 1, std::vector<double>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double xi = alpha * (grid.x_min + dx * i);
        h[0][i] = std::sqrt(alpha) * std::pow(M_PI, -0.25) * std::exp(-xi * xi / 2);
        if (kmax >= 1) h[1][i] = std::sqrt(2.0) * xi * h[0][i];
        for (int k = 2; k <= kmax; ++k)
            h[k][i] = std::sqrt(2.0 / k) * xi * h[k - 1][i] - std::sqrt((k - 1.0) / k) * h[k - 2][i];
    }
    return h;
}

GridFunction assemble_on_grid(const CVector& coeffs, const ParamPoint& at, const GridSpec& grid) {
    const auto h = hermite_table(static_cast<int>(coeffs.size()) - 1, at, grid);
    GridFunction out{grid.x_min, grid.x_max, std::vector<std::complex<double>>(grid.points)};
    for (int i = 0; i < grid.points; ++i) {
        std::complex<double> v = 0.0;
        for (int k = 0; k < coeffs.size(); ++k) v += coeffs(k) * h[k][i];
        out.values[i] = v;
    }
    return out;
}

}  // namespace

CMatrix matrixize(const OperatorPoly& op, int dim, double M) {
    if (op.convention != Convention::Scaled)
        throw convention_error("the matrix oracle works in the scaled convention");
    if (!(M > 0.0)) throw std::invalid_argument("M_value must be positive");
    if (dim < 2) throw std::invalid_argument("matrix dimension must be at least 2");
    if (dim <= op.degree() + 2)
        throw std::invalid_argument("matrix dimension too small for the operator degree");

    // Pad so that truncating the recursion products leaves interior entries exact.
    const int big = dim + op.degree() + 2;
    const CMatrix a = ladder(big);
    const CMatrix X = (a + a.adjoint()) / std::sqrt(2.0 * M);
    const CMatrix P = std::complex<double>(0.0, 1.0) * std::sqrt(M / 2.0) * (a.adjoint() - a);

    CMatrix out = CMatrix::Zero(dim, dim);
    bool real_coeffs = true;
    for (const auto& [key, c] : op.terms) {
        real_coeffs = real_coeffs && c.is_real();
        CMatrix T = CMatrix::Identity(big, big);
        for (int i = 0; i < key.s; ++i) T = X * T;
        for (int i = 0; i < key.r; ++i) T = 0.5 * (P * T + T * P);
        out += c.eval({.M = M}) * T.topLeftCorner(dim, dim);
    }
    if (real_coeffs && !op.terms.empty()) {
        const double scale = std::max(1.0, out.norm());
        if ((out - out.adjoint()).norm() > 1e-12 * scale)
            throw std::logic_error("real-coefficient operator produced a non-Hermitian matrix");
    }
    return out;
}

CMatrix matrixize(const PerturbationSeries& series, double eps, int dim, double M) {
    if (series.convention != Convention::Scaled)
        throw convention_error("the matrix oracle works in the scaled convention");
    CMatrix out = CMatrix::Zero(dim, dim);
    for (const auto& [k, p] : series.coeffs) out += std::pow(eps, k) * matrixize(p, dim, M);
    return out;
}

CMatrix hamiltonian_matrix(double eps, int dim, double M) {
    CMatrix out = matrixize(build_H(HPart::H0), dim, M);
    out += eps * matrixize(build_H(HPart::H1), dim, M);
    out += eps * eps * matrixize(build_H(HPart::H2), dim, M);
    return out;
}

SpectrumResult spectrum_H(double eps, int dim, double M, int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be positive");
    if (dim < 4 * levels + 40)
        throw std::invalid_argument("matrix dimension must be at least 4*levels + 40");

    const auto lowest = [&](int d) {
        Eigen::ComplexEigenSolver<CMatrix> solver(hamiltonian_matrix(eps, d, M), false);
        if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
        std::vector<std::complex<double>> w(solver.eigenvalues().data(),
                                            solver.eigenvalues().data() + d);
        std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.real() < b.real(); });
        w.resize(levels);
        return w;
    };

    SpectrumResult res;
    res.eigenvalues = lowest(dim);
    res.eps = eps;
    res.M = M;
    res.dim = dim;
    const auto ref = lowest(dim + 20);
    for (int i = 0; i < levels; ++i)
        res.truncation_shift = std::max(res.truncation_shift, std::abs(res.eigenvalues[i] - ref[i]));
    res.converged = res.truncation_shift < 1e-8;
    return res;
}

MetricReport metric_checks(const QHierarchy& qh, double eps, int dim, double M) {
    if (dim < 40) throw std::invalid_argument("metric checks need matrix dimension >= 40");
    const CMatrix Qm = matrixize(qh.as_series(), eps, dim, M);
    const CMatrix H = hamiltonian_matrix(eps, dim, M);
    CMatrix Par = CMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) Par(n, n) = (n % 2 == 0) ? 1.0 : -1.0;

    const CMatrix eQ = Qm.exp();
    const CMatrix emQ = (-Qm).exp();
    const CMatrix C = eQ * Par;

    const int half = dim / 2;
    const auto inorm = [half](const CMatrix& A) { return A.topLeftCorner(half, half).norm(); };

    MetricReport rep;
    rep.eps = eps;
    rep.M = M;
    rep.dim = dim;
    rep.q_orders = qh.max_order;
    rep.c_square_defect = inorm(C * C - CMatrix::Identity(dim, dim));
    rep.c_commutator_defect = inorm(C * H - H * C);
    rep.pseudo_hermiticity_defect = inorm(emQ * H * eQ - H.adjoint());
    return rep;
}

double observable_pseudo_defect(ObservableKind which, const QHierarchy& qh, int obs_order, double eps,
                                int dim, double M) {
    if (dim < 40) throw std::invalid_argument("observable check needs matrix dimension >= 40");
    const ObservableSeries obs = build_observable(which, qh, obs_order);
    const CMatrix Om = matrixize(obs.series, eps, dim, M);
    const CMatrix Qm = matrixize(qh.as_series(), eps, dim, M);
    const CMatrix eQ = Qm.exp();
    const CMatrix emQ = (-Qm).exp();
    const int half = dim / 2;
    return (emQ * Om * eQ - Om.adjoint()).topLeftCorner(half, half).norm();
}

double norm_squared(const GridFunction& f) {
    if (f.points() < 2) throw std::invalid_argument("grid function needs at least two points");
    const double dx = f.spacing();
    double acc = 0.0;
    for (int i = 0; i < f.points(); ++i) {
        const double w = (i == 0 || i == f.points() - 1) ? 0.5 : 1.0;
        acc += w * std::norm(f.values[i]);
    }
    return acc * dx;
}

GridFunction basis_wavefunction(int k, const ParamPoint& at, const GridSpec& grid) {
    if (k < 0) throw std::invalid_argument("level index must be nonnegative");
    CVector c = CVector::Zero(k + 1);
    c(k) = 1.0;
    return assemble_on_grid(c, at, grid);
}

GridFunction physical_wavefunction(int n, double eps, const ParamPoint& at, int order,
                                   const GridSpec& grid) {
    if (n < 0) throw std::invalid_argument("level index must be nonnegative");
    if (order < 0 || order > 3)
        throw std::invalid_argument("similarity expansion order must be within 0..3");

    const int dim = n + 16;
    // In scaled variables the generator tables live at M = sqrt(mass)*hbar*mu
    // and every expansion order carries one factor mass*hbar^3 with eps.
    const double Mval = std::sqrt(at.mass) * at.hbar * at.mu;
    const double eps_s = at.mass * at.hbar * at.hbar * at.hbar * eps;

    CVector v = CVector::Zero(dim);
    v(n) = 1.0;
    CVector c = v;
    if (order >= 1) {
        const QHierarchy qh = build_q_hierarchy(order >= 3 ? 3 : 1);
        const CMatrix Q1 = matrixize(qh.at(1), dim, Mval);
        c -= (eps_s / 2) * (Q1 * v);
        if (order >= 2) c += (eps_s * eps_s / 8) * (Q1 * (Q1 * v));
        if (order >= 3) {
            const CMatrix Q3 = matrixize(qh.at(3), dim, Mval);
            const double e3 = eps_s * eps_s * eps_s;
            c -= e3 * (0.5 * (Q3 * v) + (Q1 * (Q1 * (Q1 * v))) / 48.0);
        }
    }

    GridFunction psi = assemble_on_grid(c, at, grid);
    // If the grid misses support or undersamples, the sampled norm cannot
    // reproduce the coefficient norm.
    const double captured = norm_squared(psi);
    const double expect = c.squaredNorm();
    if (std::abs(captured - expect) > 1e-6 * expect)
        throw std::runtime_error("grid too narrow or coarse: wavefunction normalization not captured");
    return psi;
}

GridFunction probability_density(const GridFunction& psi) {
    const double N = norm_squared(psi);
    if (!(N > 0.0) || !std::isfinite(N)) throw std::domain_error("cannot normalize a zero wavefunction");
    GridFunction rho{psi.x_min, psi.x_max, std::vector<std::complex<double>>(psi.points())};
    for (int i = 0; i < psi.points(); ++i) rho.values[i] = std::norm(psi.values[i]) / N;
    return rho;
}

}  // namespace weylpt
