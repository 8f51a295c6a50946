#include "weylpt/physical.hpp"

#include <algorithm>
#include <functional>

namespace weylpt {

PerturbationSeries to_physical(const PerturbationSeries& scaled) {
    if (scaled.convention != Convention::Scaled)
        throw convention_error("to_physical expects a scaled-convention series");

    PerturbationSeries out(scaled.max_order, Convention::Physical);
    for (const auto& [k, poly] : scaled.coeffs) {
        OperatorPoly phys(Convention::Physical);
        for (const auto& [key, coeff] : poly.terms) {
            CoeffValue c;
            for (const auto& [e, v] : coeff.terms) {
                if (e.hbar != 0 || e.mass != 0 || e.mu != 0)
                    throw std::logic_error("scaled coefficient already carries physical exponents");
                if (e.M % 2 != 0)
                    throw std::logic_error("odd M exponent leaves a half-integer mass power");
                c.add({.M = 0, .hbar = e.M + 3 * k - key.s, .mass = e.M / 2 + k - 1, .mu = e.M}, v);
            }
            phys.add_term(key, c);
        }
        out.set(k, std::move(phys));
    }
    return out;
}

OperatorPoly to_ordered(const OperatorPoly& f) {
    const bool physical = f.convention == Convention::Physical;
    OperatorPoly out(f.convention);

    // x^s p^r = sum_j (i*hbar/2)^j j! C(s,j) C(r,j) S[r-j, s-j]; peel the
    // symmetrized terms from the top degree down, re-expanding the tails.
    const std::function<void(int, int, const CoeffValue&)> place = [&](int r, int s, const CoeffValue& c) {
        out.add_term({r, s}, c);
        for (int j = 1; j <= std::min(r, s); ++j) {
            const Rational mag = rational_pow(Rational(1, 2), j) *
                                 Rational(factorial(j) * binomial(s, j) * binomial(r, j));
            GaussianRational w;  // i^j * mag
            switch (j % 4) {
                case 0: w = GaussianRational(mag); break;
                case 1: w = GaussianRational(0, mag); break;
                case 2: w = GaussianRational(-mag); break;
                default: w = GaussianRational(0, -mag); break;
            }
            CoeffValue corr = c.scaled(-w);
            if (physical) corr = corr.shifted({.hbar = j});
            place(r - j, s - j, corr);
        }
    };
    for (const auto& [key, c] : f.terms) place(key.r, key.s, c);
    return out;
}

OperatorPoly ClassicalHamiltonian::order_or_zero(int k) const {
    auto it = orders.find(k);
    return it == orders.end() ? OperatorPoly(Convention::Physical) : it->second;
}

ClassicalHamiltonian classical_limit(const PerturbationSeries& phys) {
    if (phys.convention != Convention::Physical)
        throw convention_error("classical limit expects a physical-convention series");

    ClassicalHamiltonian hc;
    for (const auto& [k, poly] : phys.coeffs) {
        OperatorPoly limit(Convention::Physical);
        for (const auto& [key, coeff] : poly.terms) {
            CoeffValue kept;
            for (const auto& [e, v] : coeff.terms) {
                if (e.hbar < 0)
                    throw limit_error("term S[" + std::to_string(key.r) + "," + std::to_string(key.s) +
                                      "] carries hbar^" + std::to_string(e.hbar) +
                                      "; the hbar -> 0 limit does not exist");
                if (e.hbar > 0) continue;  // quantum correction, vanishes in the limit
                if (!v.is_real())
                    throw std::logic_error("classical limit produced a complex coefficient");
                kept.add(e, v);
            }
            limit.add_term(key, kept);
        }
        if (!limit.is_zero()) hc.orders.emplace(k, std::move(limit));
    }
    return hc;
}

CoeffValue mass_function_coefficient(const ClassicalHamiltonian& hc) {
    const OperatorPoly eps2 = hc.order_or_zero(2);
    const CoeffValue* cross = eps2.find(2, 2);
    if (!cross) return CoeffValue();
    return cross->scaled(GaussianRational(2)).shifted({.mass = 1});
}

}  // namespace weylpt
