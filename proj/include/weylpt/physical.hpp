#pragma once

#include "weylpt/series.hpp"

namespace weylpt {

// Raised when the hbar -> 0 limit is taken on a polynomial that still carries
// negative hbar powers.
struct limit_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Maps a Scaled-convention series to physical variables: substitutes
// M -> sqrt(mass)*hbar*mu and the order-k grading factor (mass*hbar^3)^k,
// divides by one overall mass, and rescales T[r,s] -> hbar^{-s} S[r,s].
// Half-integer mass powers must cancel; a surviving odd M exponent (or any
// pre-existing physical exponent in the input) is an internal error.
PerturbationSeries to_physical(const PerturbationSeries& scaled);

// Rewrites a polynomial of symmetrized S[r,s] (or T[r,s]) terms as an ordered
// sum: the key (r,s) of the result is the coefficient of x^s p^r with every
// position factor to the left of every momentum factor. In the Physical
// convention each reordering step carries a power of hbar.
OperatorPoly to_ordered(const OperatorPoly& f);

// hbar -> 0 limit of a physical series: order k holds the coefficient
// polynomial of eps^k in the commuting variables, key (r,s) = p_c^r x_c^s.
struct ClassicalHamiltonian {
    std::map<int, OperatorPoly> orders;

    OperatorPoly order_or_zero(int k) const;
};

ClassicalHamiltonian classical_limit(const PerturbationSeries& phys);

// Coefficient c in the effective inverse mass 1/M(x_c) = (1 + c*eps^2*x_c^2)/mass,
// read off the eps^2 cross term c/(2*mass)*x_c^2*p_c^2 of the classical limit.
CoeffValue mass_function_coefficient(const ClassicalHamiltonian& hc);

}  // namespace weylpt
