#pragma once

#include "weylpt/poly.hpp"

#include <map>

namespace weylpt {

struct depth_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Graded expansion sum_k eps^k * coeffs[k], truncated at max_order.
// Absent order means the zero operator.
class PerturbationSeries {
  public:
    std::map<int, OperatorPoly> coeffs;
    int max_order = 0;
    Convention convention = Convention::Scaled;

    PerturbationSeries() = default;
    explicit PerturbationSeries(int max, Convention conv = Convention::Scaled)
        : max_order(max), convention(conv) {}

    void set(int order, OperatorPoly p);
    void add(int order, const OperatorPoly& p);
    const OperatorPoly* at(int order) const;
    OperatorPoly order_or_zero(int order) const;
    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const PerturbationSeries& a, const PerturbationSeries& b) = default;
};

// Graded commutator [a, b] collecting contributions up to max_order.
PerturbationSeries series_commutator(const PerturbationSeries& a, const PerturbationSeries& b, int max_order);

// e^{-scale*G} B e^{scale*G} = sum_m (scale^m/m!) ad_G^m(B), graded by eps order.
// The generator must provide every odd order <= max_order it is responsible for;
// otherwise the expansion would silently miss contributions, so it is an error.
PerturbationSeries conjugate_by_exp(const PerturbationSeries& generator, const PerturbationSeries& target,
                                    const Rational& scale, int max_order);

}  // namespace weylpt
