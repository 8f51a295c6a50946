#pragma once

#include "weylpt/qsolve.hpp"

namespace weylpt {

// Even-order expansion of the equivalent self-adjoint Hamiltonian
// h = e^{-Q/2} H e^{Q/2}; odd orders vanish identically.
struct HermitianSeries {
    std::map<int, OperatorPoly> h;  // even orders 0, 2, ..., max_order
    int max_order = 0;

    const OperatorPoly& at(int k) const;
    PerturbationSeries as_series() const;
};

// Builds h^(0)..h^(max_order) from the closed nested-commutator combinations
// (weights 1/4, 1/192, 1/7680), then cross-checks the result against direct
// graded conjugation of the full H series and verifies self-adjointness,
// x/p-evenness and the vanishing of all odd orders — exactly.
// max_order must be even and <= 6; the hierarchy must reach max_order - 1.
HermitianSeries build_hermitian_h(const QHierarchy& qh, int max_order);

enum class ObservableKind { Position, Momentum };

// Similarity-transformed canonical variable: e^{Q/2} x e^{-Q/2} (Position)
// or the same for p (Momentum), graded through eps^max_order.
struct ObservableSeries {
    ObservableKind which = ObservableKind::Position;
    PerturbationSeries series;
};

// max_order <= 3; the hierarchy must supply every odd order <= max_order.
// Verifies the symbol-level PT signature: the position series is PT-odd,
// the momentum series PT-even, order by order.
ObservableSeries build_observable(ObservableKind which, const QHierarchy& qh, int max_order);

}  // namespace weylpt
