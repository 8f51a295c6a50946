#pragma once

#include "weylpt/series.hpp"

#include <vector>

namespace weylpt {

// Raised when a right-hand side is not in the image of ad_{H0} on p-odd
// polynomials; carries the offending monomials instead of truncating.
struct obstruction_error : std::runtime_error {
    std::vector<std::pair<BasisKey, CoeffValue>> monomials;
    explicit obstruction_error(std::vector<std::pair<BasisKey, CoeffValue>> m);
};

// Unique p-odd solution Q of commutator(H0, Q) = rhs. Because H0 is quadratic,
// ad_{H0} acts as the first-order operator i(M^2 x d_p - p d_x) on symbols and
// the system splits into independent bidiagonal solves per total degree.
OperatorPoly solve_adjoint_equation(const OperatorPoly& rhs);

struct QHierarchy {
    std::map<int, OperatorPoly> q;  // odd orders 1,3,5,7
    int max_order = 0;

    const OperatorPoly& at(int k) const;
    PerturbationSeries as_series() const;
};

// Right-hand side of the order-k equation assembled from lower hierarchy
// members (exact nested-commutator combinations with weights 1/6, 1/360, 1/15120).
OperatorPoly hierarchy_rhs(int k, const QHierarchy& lower);

// Solves the odd orders 1..max_order (max_order in {1,3,5,7}) and re-checks
// every residual exactly before returning.
QHierarchy build_q_hierarchy(int max_order);

PerturbationSeries build_Q_total(const QHierarchy& qh);

}  // namespace weylpt
