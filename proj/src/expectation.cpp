#include "weylpt/expectation.hpp"

#include <map>
#include <utility>

namespace weylpt {

void NPolynomial::add(size_t power, const CoeffValue& c) {
    if (c.is_zero()) return;
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c;
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

bool NPolynomial::is_zero() const { return coeffs.empty(); }

CoeffValue NPolynomial::at_integer(long n) const {
    CoeffValue tot;
    GaussianRational npow(1);
    for (const CoeffValue& c : coeffs) {
        tot += c.scaled(npow);
        npow *= GaussianRational(n);
    }
    return tot;
}

std::complex<double> NPolynomial::eval(long n, const ParamPoint& at) const { return at_integer(n).eval(at); }

NPolynomial& NPolynomial::operator+=(const NPolynomial& o) {
    for (size_t j = 0; j < o.coeffs.size(); ++j) add(j, o.coeffs[j]);
    return *this;
}

NPolynomial NPolynomial::scaled(const GaussianRational& s) const {
    NPolynomial out;
    for (size_t j = 0; j < coeffs.size(); ++j) out.add(j, coeffs[j].scaled(s));
    return out;
}

namespace {

// Symbol of a ladder polynomial: map (a-exponent, adag-exponent) -> coefficient.
using LadderSymbol = std::map<std::pair<int, int>, Rational>;

// Weyl symbol of T[r,s] in ladder variables, built by symmetrized
// multiplication: u = a + a^dag and v = a^dag - a act on a normal symbol g as
//   (1/2){u, .}: (z + zbar) g + (1/2)(d_z + d_zbar) g
//   (1/2){v, .}: (zbar - z) g + (1/2)(d_z - d_zbar) g
// applying all s position factors first, then the r momentum factors.
LadderSymbol ladder_symbol(int r, int s) {
    LadderSymbol g{{{0, 0}, Rational(1)}};
    const auto step = [&](bool momentum) {
        LadderSymbol next;
        const auto bump = [&next](int a, int b, const Rational& v) {
            if (v == 0) return;
            auto [it, fresh] = next.emplace(std::make_pair(a, b), v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) next.erase(it);
            }
        };
        for (const auto& [key, v] : g) {
            const auto [a, b] = key;
            bump(a + 1, b, momentum ? -v : v);  // z * g
            bump(a, b + 1, v);                  // zbar * g
            bump(a - 1, b, Rational(a * v / 2));  // (1/2) d_z g
            Rational dzbar = b * v / 2;           // (1/2) d_zbar g, sign flips for v
            if (momentum) dzbar = -dzbar;
            bump(a, b - 1, dzbar);
        }
        g = std::move(next);
    };
    for (int i = 0; i < s; ++i) step(false);
    for (int i = 0; i < r; ++i) step(true);
    return g;
}

// Falling factorial n(n-1)...(n-k+1) as a coefficient vector in n.
std::vector<Rational> falling_factorial_poly(int k) {
    std::vector<Rational> poly{Rational(1)};
    for (int j = 0; j < k; ++j) {
        std::vector<Rational> next(poly.size() + 1);
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= poly[d] * j;
        }
        poly = std::move(next);
    }
    return poly;
}

// <n|T[r,s]|n> as a polynomial in n: i^r 2^{-(r+s)/2} M^{(r-s)/2} times the
// diagonal (z zbar)^a part of the ladder symbol contracted with n!/(n-a)!.
NPolynomial basis_expectation(int r, int s) {
    NPolynomial out;
    if ((r + s) % 2 != 0) return out;

    std::vector<Rational> diag;  // coefficient of n^j
    for (const auto& [key, v] : ladder_symbol(r, s)) {
        const auto [a, b] = key;
        if (a != b) continue;
        const std::vector<Rational> ff = falling_factorial_poly(a);
        if (diag.size() < ff.size()) diag.resize(ff.size());
        for (size_t j = 0; j < ff.size(); ++j) diag[j] += v * ff[j];
    }

    const Rational mag = rational_pow(Rational(1, 2), (r + s) / 2);
    GaussianRational phase;  // i^r * mag
    switch (r % 4) {
        case 0: phase = GaussianRational(mag); break;
        case 1: phase = GaussianRational(0, mag); break;
        case 2: phase = GaussianRational(-mag); break;
        default: phase = GaussianRational(0, -mag); break;
    }
    const ParamExponents mexp{.M = (r - s) / 2};
    for (size_t j = 0; j < diag.size(); ++j) out.add(j, CoeffValue(phase * GaussianRational(diag[j]), mexp));

    if (!out.is_zero())
        for (const CoeffValue& c : out.coeffs)
            if (!c.is_real()) throw std::logic_error("diagonal matrix element came out complex");
    return out;
}

}  // namespace

NPolynomial number_state_expectation(const OperatorPoly& op) {
    if (op.convention != Convention::Scaled)
        throw convention_error("number-state expectation is defined for the scaled convention");
    NPolynomial out;
    for (const auto& [key, c] : op.terms) {
        NPolynomial base = basis_expectation(key.r, key.s);
        for (size_t j = 0; j < base.coeffs.size(); ++j) out.add(j, c * base.coeffs[j]);
    }
    return out;
}

CoeffValue number_state_expectation(const OperatorPoly& op, long n) {
    if (n < 0) throw std::invalid_argument("number-state label must be nonnegative");
    return number_state_expectation(op).at_integer(n);
}

EnergyFormula energy_formula(const HermitianSeries& hs) {
    if (hs.max_order < 2) throw depth_error("energy formula needs the hermitian series through order 2");
    EnergyFormula ef;
    ef.harmonic.add(0, CoeffValue::rational(1, 2, {.M = 1}));
    ef.harmonic.add(1, CoeffValue::integer(1, {.M = 1}));
    ef.correction = number_state_expectation(hs.at(2));
    return ef;
}

double EnergyFormula::value(long n, double eps, const ParamPoint& at) const {
    return harmonic.eval(n, at).real() + eps * eps * correction.eval(n, at).real();
}

}  // namespace weylpt
