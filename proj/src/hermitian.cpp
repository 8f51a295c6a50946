#include "weylpt/hermitian.hpp"

namespace weylpt {

namespace {

PerturbationSeries full_H() {
    PerturbationSeries H(2, Convention::Scaled);
    H.set(0, build_H(HPart::H0));
    H.set(1, build_H(HPart::H1));
    H.set(2, build_H(HPart::H2));
    return H;
}

}  // namespace

const OperatorPoly& HermitianSeries::at(int k) const {
    auto it = h.find(k);
    if (it == h.end()) throw depth_error("hermitian series does not contain order " + std::to_string(k));
    return it->second;
}

PerturbationSeries HermitianSeries::as_series() const {
    PerturbationSeries s(max_order, Convention::Scaled);
    for (const auto& [k, p] : h) s.set(k, p);
    return s;
}

HermitianSeries build_hermitian_h(const QHierarchy& qh, int max_order) {
    if (max_order < 0 || max_order > 6 || max_order % 2 != 0)
        throw std::invalid_argument("hermitian series order must be even and within 0..6");
    if (max_order > 0 && qh.max_order < max_order - 1)
        throw depth_error("hierarchy reaches order " + std::to_string(qh.max_order) +
                          " but order " + std::to_string(max_order - 1) +
                          " is needed; build a deeper hierarchy");

    const OperatorPoly h1 = build_H(HPart::H1);
    const OperatorPoly h2 = build_H(HPart::H2);
    const GaussianRational quarter = GaussianRational::ratio(1, 4);
    const GaussianRational m192 = GaussianRational::ratio(-1, 192);
    const GaussianRational p7680 = GaussianRational::ratio(1, 7680);

    HermitianSeries hs;
    hs.max_order = max_order;
    hs.h.emplace(0, build_H(HPart::H0));
    if (max_order >= 2) hs.h.emplace(2, h2 + commutator(h1, qh.at(1)).scaled(quarter));
    if (max_order >= 4) {
        const OperatorPoly chain3 = commutator(commutator(commutator(h1, qh.at(1)), qh.at(1)), qh.at(1));
        hs.h.emplace(4, commutator(h1, qh.at(3)).scaled(quarter) + chain3.scaled(m192));
    }
    if (max_order >= 6) {
        // All placements of one Q3 among two Q1 in the triple chain.
        const auto chain = [&](int a, int b, int c) {
            return commutator(commutator(commutator(h1, qh.at(a)), qh.at(b)), qh.at(c));
        };
        const OperatorPoly mixed = chain(1, 1, 3) + chain(1, 3, 1) + chain(3, 1, 1);
        OperatorPoly chain5 = commutator(h1, qh.at(1));
        for (int i = 0; i < 4; ++i) chain5 = commutator(chain5, qh.at(1));
        hs.h.emplace(6, commutator(h1, qh.at(5)).scaled(quarter) + mixed.scaled(m192) + chain5.scaled(p7680));
    }

    // Cross-check: the closed combinations must coincide with direct graded
    // conjugation e^{-Q/2} H e^{Q/2}, and all odd orders of that expansion
    // must cancel. Exact comparison; any mismatch is an internal defect.
    const PerturbationSeries bch =
        conjugate_by_exp(qh.as_series(), full_H(), Rational(1, 2), max_order);
    for (int k = 0; k <= max_order; ++k) {
        const OperatorPoly got = bch.order_or_zero(k);
        if (k % 2 != 0) {
            if (!got.is_zero())
                throw std::logic_error("odd order " + std::to_string(k) + " of h failed to vanish");
            continue;
        }
        if (!(got == hs.at(k)))
            throw std::logic_error("closed form and direct conjugation disagree at order " + std::to_string(k));
    }

    for (const auto& [k, p] : hs.h) {
        if (!(dagger(p) == p)) throw std::logic_error("h order " + std::to_string(k) + " is not self-adjoint");
        for (const auto& [key, c] : p.terms)
            if (key.r % 2 != 0 || key.s % 2 != 0)
                throw std::logic_error("h order " + std::to_string(k) + " has an odd-parity monomial");
    }
    return hs;
}

ObservableSeries build_observable(ObservableKind which, const QHierarchy& qh, int max_order) {
    if (max_order < 0 || max_order > 3)
        throw std::invalid_argument("observable series order must be within 0..3");

    PerturbationSeries seed(0, Convention::Scaled);
    seed.set(0, which == ObservableKind::Position ? OperatorPoly::monomial(0, 1, CoeffValue::integer(1))
                                                  : OperatorPoly::monomial(1, 0, CoeffValue::integer(1)));

    ObservableSeries obs;
    obs.which = which;
    obs.series = conjugate_by_exp(qh.as_series(), seed, Rational(-1, 2), max_order);

    // PT signature per order: x is PT-odd, p is PT-even, and conjugation by
    // e^{Q/2} preserves that because Q itself is PT-symmetric.
    const GaussianRational sign(which == ObservableKind::Position ? -1 : 1);
    for (const auto& [k, p] : obs.series.coeffs)
        if (!(apply_pt(p) == p.scaled(sign)))
            throw std::logic_error("observable order " + std::to_string(k) + " violates its PT signature");
    return obs;
}

}  // namespace weylpt
