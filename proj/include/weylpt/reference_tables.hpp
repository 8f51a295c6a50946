#pragma once

#include "weylpt/expectation.hpp"

#include <string>

namespace weylpt {

// Published expansion tables, transcribed verbatim — suspected misprints
// included — so every computed object can be diffed against its printed form.
// The engine treats its own exact residuals as ground truth and reports any
// deviation from these tables instead of asserting agreement.

OperatorPoly reference_generator(int k);  // odd k = 1, 3, 5, 7
OperatorPoly reference_hermitian(int k);  // even k = 0, 2, 4 (printed table stops at 4)
int reference_hermitian_max_order();

PerturbationSeries reference_observable(ObservableKind which);  // orders 0..3

// Printed first-order energy correction <n|h2|n>: (1/8)M^-4 (30n^2+30n+11)
// - (1/4)(6n^2+6n+3), the second bracket printed without any M power. The
// exact result carries M^-2 there, so the forms coincide only at M = 1.
NPolynomial reference_energy_correction();

// Printed eps^2 block of the physical Hermitian Hamiltonian in ordered form,
// key (r,s) = x^s p^r (Physical convention).
OperatorPoly reference_physical_h2_ordered();

// Printed classical limit, key (r,s) = p_c^r x_c^s (Physical convention);
// k = 0 or 2. The eps^2 block carries the negative cross term
// -3 mass^-1 mu^-4 x_c^2 p_c^2 of the printed position-dependent mass.
OperatorPoly reference_classical(int k);

struct TableComparison {
    std::string label;
    OperatorPoly computed;
    OperatorPoly reference;
    OperatorPoly deviation;  // computed - reference

    bool matches() const { return deviation.is_zero(); }
};

TableComparison compare_with_reference(std::string label, OperatorPoly computed, OperatorPoly reference);

}  // namespace weylpt
