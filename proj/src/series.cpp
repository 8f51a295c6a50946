#include "weylpt/series.hpp"

namespace weylpt {

void PerturbationSeries::set(int order, OperatorPoly p) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    if (p.is_zero()) {
        coeffs.erase(order);
        return;
    }
    if (p.convention != convention) throw convention_error("series and member operator conventions differ");
    coeffs.insert_or_assign(order, std::move(p));
    if (order > max_order) max_order = order;
}

void PerturbationSeries::add(int order, const OperatorPoly& p) {
    if (p.is_zero()) return;
    auto it = coeffs.find(order);
    if (it == coeffs.end()) {
        set(order, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) coeffs.erase(it);
}

const OperatorPoly* PerturbationSeries::at(int order) const {
    auto it = coeffs.find(order);
    return it == coeffs.end() ? nullptr : &it->second;
}

OperatorPoly PerturbationSeries::order_or_zero(int order) const {
    const OperatorPoly* p = at(order);
    return p ? *p : OperatorPoly(convention);
}

PerturbationSeries series_commutator(const PerturbationSeries& a, const PerturbationSeries& b, int max_order) {
    PerturbationSeries out(max_order, a.convention);
    for (const auto& [ka, pa] : a.coeffs) {
        for (const auto& [kb, pb] : b.coeffs) {
            if (ka + kb > max_order) continue;
            out.add(ka + kb, commutator(pa, pb));
        }
    }
    return out;
}

PerturbationSeries conjugate_by_exp(const PerturbationSeries& generator, const PerturbationSeries& target,
                                    const Rational& scale, int max_order) {
    if (max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
    for (const auto& [k, p] : generator.coeffs)
        if (k % 2 == 0) throw std::invalid_argument("conjugation generator must have odd orders only");
    if (!generator.is_zero()) {
        for (int k = 1; k <= max_order; k += 2)
            if (!generator.at(k))
                throw depth_error("generator lacks order " + std::to_string(k) +
                                  " required for conjugation to order " + std::to_string(max_order) +
                                  "; build a deeper hierarchy");
    }

    PerturbationSeries result(max_order, target.convention);
    for (const auto& [k, p] : target.coeffs)
        if (k <= max_order) result.add(k, p);

    PerturbationSeries chain = target;  // ad_G^m(target), truncated
    Rational fac = 1;
    for (int m = 1; m <= max_order; ++m) {
        chain = series_commutator(chain, generator, max_order);
        if (chain.is_zero()) break;
        fac *= scale / m;
        const GaussianRational fr{fac};
        for (const auto& [k, p] : chain.coeffs) result.add(k, p.scaled(fr));
    }
    return result;
}

}  // namespace weylpt
