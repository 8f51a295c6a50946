#include "weylpt/qsolve.hpp"

#include <sstream>

namespace weylpt {

namespace {

std::string describe_obstruction(const std::vector<std::pair<BasisKey, CoeffValue>>& m) {
    std::ostringstream os;
    os << "right-hand side not in the image of ad_{H0}; obstruction monomials:";
    for (const auto& [k, c] : m) os << " T[" << k.r << "," << k.s << "]";
    return os.str();
}

}  // namespace

obstruction_error::obstruction_error(std::vector<std::pair<BasisKey, CoeffValue>> m)
    : std::runtime_error(describe_obstruction(m)), monomials(std::move(m)) {}

OperatorPoly solve_adjoint_equation(const OperatorPoly& rhs) {
    if (rhs.convention != Convention::Scaled)
        throw convention_error("adjoint solve is defined for the scaled convention");

    std::vector<std::pair<BasisKey, CoeffValue>> obstruction;
    // The image of ad_{H0} on p-odd polynomials is p-even, one block per degree.
    std::map<int, std::map<int, CoeffValue>> by_degree;  // degree -> (r -> coeff)
    for (const auto& [k, c] : rhs.terms) {
        if (k.r % 2 != 0)
            obstruction.emplace_back(k, c);
        else
            by_degree[k.degree()][k.r] = c;
    }

    const GaussianRational minus_i(0, -1);
    const GaussianRational plus_i(0, 1);
    OperatorPoly q(Convention::Scaled);
    for (const auto& [d, comps] : by_degree) {
        // Equation at even r': rhs_{r'} = i [ M^2 (r'+1) q_{r'+1} - (d-r'+1) q_{r'-1} ],
        // solved upward from r' = 0 with q_{-1} = 0; for even d the last equation
        // is a consistency constraint instead of producing a new unknown.
        std::map<int, CoeffValue> sol;  // odd r -> coeff of T[r, d-r]
        CoeffValue prev;                // q_{r'-1}
        for (int rp = 0; rp <= d; rp += 2) {
            CoeffValue c;
            if (auto it = comps.find(rp); it != comps.end()) c = it->second;
            if (rp + 1 <= d) {
                CoeffValue next = c.scaled(minus_i);  // c / i
                next += prev.scaled(GaussianRational(d - rp + 1));
                next = next.scaled(GaussianRational(Rational(1, rp + 1))).shifted({.M = -2});
                if (!next.is_zero()) sol[rp + 1] = next;
                prev = next;
            } else {
                CoeffValue resid = c + prev.scaled(plus_i);
                if (!resid.is_zero()) obstruction.emplace_back(BasisKey{rp, d - rp}, resid);
            }
        }
        for (const auto& [r, c] : sol) q.add_term({r, d - r}, c);
    }

    if (!obstruction.empty()) throw obstruction_error(std::move(obstruction));
    return q;
}

const OperatorPoly& QHierarchy::at(int k) const {
    auto it = q.find(k);
    if (it == q.end()) throw depth_error("hierarchy does not contain order " + std::to_string(k));
    return it->second;
}

PerturbationSeries QHierarchy::as_series() const {
    PerturbationSeries s(max_order, Convention::Scaled);
    for (const auto& [k, p] : q) s.set(k, p);
    return s;
}

OperatorPoly hierarchy_rhs(int k, const QHierarchy& lower) {
    const OperatorPoly h1 = build_H(HPart::H1);
    const OperatorPoly h2 = build_H(HPart::H2);
    const auto nest = [&](std::initializer_list<int> qs) {
        OperatorPoly acc = h1;
        // innermost bracket first: {a, b, c} means [Q_a, [Q_b, [Q_c, H1]]]
        std::vector<int> order(qs);
        for (auto it = order.rbegin(); it != order.rend(); ++it) acc = commutator(lower.at(*it), acc);
        return acc;
    };
    const GaussianRational m16 = GaussianRational::ratio(-1, 6);
    const GaussianRational p360 = GaussianRational::ratio(1, 360);
    const GaussianRational m15120 = GaussianRational::ratio(-1, 15120);

    switch (k) {
        case 1: return h1.scaled(GaussianRational(-2));
        case 3: return nest({1, 1}).scaled(m16) + commutator(lower.at(1), h2);
        case 5:
            return (nest({3, 1}) + nest({1, 3})).scaled(m16) + nest({1, 1, 1, 1}).scaled(p360) +
                   commutator(lower.at(3), h2);
        case 7:
            return (nest({5, 1}) + nest({3, 3}) + nest({1, 5})).scaled(m16) +
                   (nest({3, 1, 1, 1}) + nest({1, 3, 1, 1}) + nest({1, 1, 3, 1}) + nest({1, 1, 1, 3}))
                       .scaled(p360) +
                   nest({1, 1, 1, 1, 1, 1}).scaled(m15120) + commutator(lower.at(5), h2);
        default: throw std::invalid_argument("hierarchy order must be 1, 3, 5 or 7");
    }
}

QHierarchy build_q_hierarchy(int max_order) {
    if (max_order != 1 && max_order != 3 && max_order != 5 && max_order != 7)
        throw std::invalid_argument("hierarchy depth must be one of 1, 3, 5, 7");

    const OperatorPoly h0 = build_H(HPart::H0);
    QHierarchy qh;
    qh.max_order = max_order;
    for (int k = 1; k <= max_order; k += 2) {
        const OperatorPoly rhs = hierarchy_rhs(k, qh);
        OperatorPoly qk = solve_adjoint_equation(rhs);
        if (!(commutator(h0, qk) == rhs))
            throw std::logic_error("adjoint solve residual nonzero at order " + std::to_string(k));
        qh.q.emplace(k, std::move(qk));
    }
    return qh;
}

PerturbationSeries build_Q_total(const QHierarchy& qh) { return qh.as_series(); }

}  // namespace weylpt
