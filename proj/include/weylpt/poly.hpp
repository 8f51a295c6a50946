#pragma once

#include "weylpt/coeff.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace weylpt {

// T[r,s]: totally symmetrized product of r momentum and s position factors.
// As a Weyl symbol this is simply the monomial p^r x^s.
struct BasisKey {
    int r = 0;
    int s = 0;

    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
    int degree() const { return r + s; }
};

enum class Convention { Scaled, Physical };

struct convention_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finite linear combination of basis monomials with exact coefficients.
// Canonical form stores no zero coefficients; equality is exact.
class OperatorPoly {
  public:
    Convention convention = Convention::Scaled;
    std::map<BasisKey, CoeffValue> terms;

    OperatorPoly() = default;
    explicit OperatorPoly(Convention c) : convention(c) {}

    static OperatorPoly monomial(int r, int s, CoeffValue c, Convention conv = Convention::Scaled);

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    void add_term(const BasisKey& k, const CoeffValue& c);
    const CoeffValue* find(int r, int s) const;

    OperatorPoly& operator+=(const OperatorPoly& o);
    OperatorPoly& operator-=(const OperatorPoly& o);
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
    OperatorPoly scaled(const GaussianRational& s) const;
    friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) = default;
};

// Moyal product of Weyl symbols; exact and terminating on polynomials.
OperatorPoly star(const OperatorPoly& f, const OperatorPoly& g);
OperatorPoly commutator(const OperatorPoly& f, const OperatorPoly& g);
OperatorPoly anticommutator(const OperatorPoly& f, const OperatorPoly& g);

// Symbol map (x,p) -> (-x,-p).
OperatorPoly apply_parity(const OperatorPoly& f);
// p -> -p plus coefficient conjugation (antiunitary time reversal).
OperatorPoly apply_time_reversal(const OperatorPoly& f);
// Coefficient conjugation; symmetrized basis elements are self-adjoint.
OperatorPoly dagger(const OperatorPoly& f);
inline OperatorPoly apply_pt(const OperatorPoly& f) { return apply_parity(apply_time_reversal(f)); }

enum class HPart { H0, H1, H2 };

// H0 = (1/2)T[2,0] + (M^2/2)T[0,2],  H1 = i T[0,3],  H2 = -T[0,4].
OperatorPoly build_H(HPart part);

}  // namespace weylpt
