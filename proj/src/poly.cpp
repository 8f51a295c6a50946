#include "weylpt/poly.hpp"

#include <algorithm>
#include <vector>

namespace weylpt {

OperatorPoly OperatorPoly::monomial(int r, int s, CoeffValue c, Convention conv) {
    OperatorPoly out(conv);
    out.add_term({r, s}, c);
    return out;
}

int OperatorPoly::degree() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, k.degree());
    return d;
}

void OperatorPoly::add_term(const BasisKey& k, const CoeffValue& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

const CoeffValue* OperatorPoly::find(int r, int s) const {
    auto it = terms.find({r, s});
    return it == terms.end() ? nullptr : &it->second;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) convention = o.convention;
    if (convention != o.convention) throw convention_error("operator convention mismatch in addition");
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) convention = o.convention;
    if (convention != o.convention) throw convention_error("operator convention mismatch in subtraction");
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
}

OperatorPoly OperatorPoly::scaled(const GaussianRational& s) const {
    OperatorPoly out(convention);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms) out.terms.emplace(k, c.scaled(s));
    return out;
}

namespace {

// (i/2)^j / j! as an exact complex rational.
GaussianRational moyal_prefactor(int j) {
    const Rational half_pow = rational_pow(Rational(1, 2), j);
    Rational mag = half_pow / Rational(factorial(j));
    switch (j % 4) {
        case 0: return GaussianRational(mag);
        case 1: return GaussianRational(0, mag);
        case 2: return GaussianRational(-mag);
        default: return GaussianRational(0, -mag);
    }
}

void require_scaled(const OperatorPoly& f, const OperatorPoly& g, const char* what) {
    if (f.convention != Convention::Scaled || g.convention != Convention::Scaled)
        throw convention_error(std::string(what) + " is defined only for the scaled (X,P) convention");
}

}  // namespace

OperatorPoly star(const OperatorPoly& f, const OperatorPoly& g) {
    require_scaled(f, g, "star product");
    OperatorPoly out(Convention::Scaled);
    for (const auto& [kf, cf] : f.terms) {
        for (const auto& [kg, cg] : g.terms) {
            const CoeffValue prod = cf * cg;
            const int jmax = std::min(kf.degree(), kg.degree());
            for (int j = 0; j <= jmax; ++j) {
                const GaussianRational pref = moyal_prefactor(j);
                for (int k = 0; k <= j; ++k) {
                    // d_x^{j-k} d_p^k acting on f's monomial, d_x^k d_p^{j-k} on g's.
                    if (kf.s < j - k || kf.r < k || kg.s < k || kg.r < j - k) continue;
                    BigInt weight = binomial(j, k) * falling_factorial(kf.s, j - k) * falling_factorial(kf.r, k) *
                                    falling_factorial(kg.s, k) * falling_factorial(kg.r, j - k);
                    if (k % 2 != 0) weight = -weight;
                    const GaussianRational scale = pref * GaussianRational(Rational(weight));
                    const BasisKey key{kf.r - k + kg.r - (j - k), kf.s - (j - k) + kg.s - k};
                    out.add_term(key, prod.scaled(scale));
                }
            }
        }
    }
    return out;
}

OperatorPoly commutator(const OperatorPoly& f, const OperatorPoly& g) { return star(f, g) - star(g, f); }

OperatorPoly anticommutator(const OperatorPoly& f, const OperatorPoly& g) { return star(f, g) + star(g, f); }

OperatorPoly apply_parity(const OperatorPoly& f) {
    OperatorPoly out(f.convention);
    for (const auto& [k, c] : f.terms) out.terms.emplace(k, k.degree() % 2 == 0 ? c : -c);
    return out;
}

OperatorPoly apply_time_reversal(const OperatorPoly& f) {
    OperatorPoly out(f.convention);
    for (const auto& [k, c] : f.terms) out.terms.emplace(k, k.r % 2 == 0 ? c.conj() : -c.conj());
    return out;
}

OperatorPoly dagger(const OperatorPoly& f) {
    OperatorPoly out(f.convention);
    for (const auto& [k, c] : f.terms) out.terms.emplace(k, c.conj());
    return out;
}

OperatorPoly build_H(HPart part) {
    switch (part) {
        case HPart::H0: {
            OperatorPoly h(Convention::Scaled);
            h.add_term({2, 0}, CoeffValue::rational(1, 2));
            h.add_term({0, 2}, CoeffValue::rational(1, 2, {.M = 2}));
            return h;
        }
        case HPart::H1: return OperatorPoly::monomial(0, 3, CoeffValue::imaginary(1, 1));
        default: return OperatorPoly::monomial(0, 4, CoeffValue::integer(-1));
    }
}

}  // namespace weylpt
