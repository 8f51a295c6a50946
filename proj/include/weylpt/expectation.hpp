#pragma once

#include "weylpt/hermitian.hpp"

#include <vector>

namespace weylpt {

// Polynomial in the number-state label n with exact parameter coefficients:
// value(n) = sum_j coeffs[j] * n^j.
struct NPolynomial {
    std::vector<CoeffValue> coeffs;

    void add(size_t power, const CoeffValue& c);
    bool is_zero() const;
    CoeffValue at_integer(long n) const;
    std::complex<double> eval(long n, const ParamPoint& at) const;

    NPolynomial& operator+=(const NPolynomial& o);
    NPolynomial scaled(const GaussianRational& s) const;
    friend bool operator==(const NPolynomial& a, const NPolynomial& b) = default;
};

// Exact diagonal matrix element <n| . |n> of a Weyl-ordered Scaled-convention
// polynomial in the H0 number basis, with X = (2M)^{-1/2}(a + a^dag) and
// P = i(M/2)^{1/2}(a^dag - a). Computed by ladder-operator normal ordering;
// the result is a polynomial in n, real, with integer M exponents.
NPolynomial number_state_expectation(const OperatorPoly& op);
CoeffValue number_state_expectation(const OperatorPoly& op, long n);

// First-order perturbative energy: E_n = M(n + 1/2) + eps^2 <n|h2|n>.
struct EnergyFormula {
    NPolynomial harmonic;    // M(n + 1/2)
    NPolynomial correction;  // <n|h^(2)|n>, multiplies eps^2

    // Exact E_n at the given integer n and numeric parameters.
    double value(long n, double eps, const ParamPoint& at) const;
};

EnergyFormula energy_formula(const HermitianSeries& hs);

}  // namespace weylpt
