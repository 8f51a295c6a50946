#include "weylpt/reference_tables.hpp"

#include <utility>
#include <vector>

namespace weylpt {

namespace {

struct Part {
    int M;
    const char* re;
    const char* im;
};

struct Term {
    int r;
    int s;
    std::vector<Part> parts;
};

OperatorPoly build(std::initializer_list<Term> terms, Convention conv = Convention::Scaled) {
    OperatorPoly f(conv);
    for (const auto& t : terms) {
        CoeffValue c;
        for (const auto& p : t.parts) c.add({.M = p.M}, {Rational(p.re), Rational(p.im)});
        f.add_term({t.r, t.s}, c);
    }
    return f;
}

OperatorPoly mono(int r, int s, CoeffValue c) { return OperatorPoly::monomial(r, s, std::move(c)); }

// Symbol of the ordered product x^s p^r, as the printed observable tables
// write their terms (e.g. "XP - i/2" stands for the symmetrized T[1,1]).
OperatorPoly ordered(int s, int r) {
    return star(mono(0, s, CoeffValue::integer(1)), mono(r, 0, CoeffValue::integer(1)));
}

}  // namespace

OperatorPoly reference_generator(int k) {
    switch (k) {
        case 1:
            return build({
                {1, 2, {{-2, "-2", "0"}}},
                {3, 0, {{-4, "-4/3", "0"}}},
            });
        case 3:
            return build({
                {1, 0, {{-8, "-12", "0"}, {-6, "8", "0"}}},
                {1, 4, {{-6, "8", "0"}, {-4, "-8", "0"}}},
                {3, 2, {{-8, "40/3", "0"}, {-6, "-16", "0"}}},
                {5, 0, {{-10, "128/15", "0"}, {-8, "-32/5", "0"}}},
            });
        case 5:
            return build({
                {1, 2, {{-12, "6368/15", "0"}, {-10, "-128", "0"}, {-8, "128", "0"}}},
                {1, 6, {{-10, "-64", "0"}, {-8, "32", "0"}, {-6, "-32", "0"}}},
                {3, 0, {{-14, "24736/45", "0"}, {-12, "-256", "0"}, {-10, "640/3", "0"}}},
                {3, 4, {{-12, "-512/3", "0"}, {-10, "352/3", "0"}, {-8, "-128", "0"}}},
                {5, 2, {{-14, "-544/3", "0"}, {-12, "128", "0"}, {-10, "-128", "0"}}},
                {7, 0, {{-16, "-320/3", "0"}, {-14, "256/7", "0"}, {-12, "-256/7", "0"}}},
            });
        case 7:
            return build({
                {1, 0, {{-18, "46976/5", "0"}, {-16, "-49472/15", "0"}, {-14, "1536", "0"}, {-12, "-1280", "0"}}},
                {1, 4, {{-16, "-390336/35", "0"}, {-14, "40832/15", "0"}, {-12, "-1216", "0"}, {-10, "1280", "0"}}},
                {1, 8, {{-14, "1792/3", "0"}, {-12, "-256", "0"}, {-10, "128", "0"}, {-8, "-128", "0"}}},
                {3, 2, {{-18, "-2875648/105", "0"}, {-16, "141824/15", "0"}, {-14, "-15616/3", "0"}, {-12, "5120", "0"}}},
                {3, 6, {{-16, "721024/315", "0"}, {-14, "-4096/3", "0"}, {-12, "2432/3", "0"}, {-10, "-2560/3", "0"}}},
                {5, 0, {{-20, "-2209024/105", "0"}, {-18, "619648/75", "0"}, {-16, "-54272/15", "0"}, {-14, "3584", "0"}}},
                {5, 4, {{-18, "377344/105", "0"}, {-16, "-35456/15", "0"}, {-14, "7424/5", "0"}, {-12, "-1536", "0"}}},
                {7, 2, {{-20, "97792/35", "0"}, {-18, "-62208/35", "0"}, {-16, "34816/35", "0"}, {-14, "-1024", "0"}}},
                {9, 0, {{-22, "553984/315", "0"}, {-20, "-13824/35", "0"}, {-18, "69632/315", "0"}, {-16, "-2048/9", "0"}}},
            });
        default: throw std::out_of_range("no printed generator table for order " + std::to_string(k));
    }
}

OperatorPoly reference_hermitian(int k) {
    switch (k) {
        case 0:
            return build({
                {0, 2, {{2, "1/2", "0"}}},
                {2, 0, {{0, "1/2", "0"}}},
            });
        case 2:
            return build({
                {0, 0, {{-4, "-1/2", "0"}}},
                {0, 4, {{-2, "3/2", "0"}, {0, "-1", "0"}}},
                {2, 2, {{-4, "3", "0"}}},
            });
        case 4:
            return build({
                {0, 2, {{-8, "179/24", "0"}, {-6, "-12", "0"}}},
                {0, 6, {{-6, "-7/2", "0"}, {-4, "6", "0"}}},
                {2, 0, {{-10, "27", "0"}, {-8, "-24", "0"}}},
                {2, 4, {{-8, "-51/2", "0"}, {-6, "36", "0"}}},
                {4, 2, {{-10, "-36", "0"}, {-8, "24", "0"}}},
                {6, 0, {{-12, "2", "0"}}},
            });
        default: throw std::out_of_range("no printed hermitian table for order " + std::to_string(k));
    }
}

int reference_hermitian_max_order() { return 4; }

PerturbationSeries reference_observable(ObservableKind which) {
    PerturbationSeries s(3, Convention::Scaled);
    if (which == ObservableKind::Position) {
        s.set(0, mono(0, 1, CoeffValue::integer(1)));
        // i M^-2 X^2 + 2i M^-4 P^2
        s.set(1, build({
            {0, 2, {{-2, "0", "1"}}},
            {2, 0, {{-4, "0", "2"}}},
        }));
        // 2 M^-6 X P^2 - 2i M^-6 P - M^-4 X^3
        OperatorPoly o2 = ordered(1, 2).scaled(GaussianRational(2));
        for (auto& [key, c] : o2.terms) c = c.shifted({.M = -6});
        o2.add_term({1, 0}, CoeffValue::imaginary(-2, 1, {.M = -6}));
        o2.add_term({0, 3}, CoeffValue::integer(-1, {.M = -4}));
        s.set(2, o2);
        // i(-172/15 M^-10 + 16 M^-8) P^4 - i(5 M^-6 - 4 M^-4) X^4
        //   - (128/3 M^-8 - 48 M^-6) XP + i(64/3 M^-8 - 24 M^-6) X^2P^2
        //   + i(50/3 M^-8 - 16 M^-6)
        OperatorPoly o3 = build({
            {4, 0, {{-10, "0", "-172/15"}, {-8, "0", "16"}}},
            {0, 4, {{-6, "0", "-5"}, {-4, "0", "4"}}},
            {0, 0, {{-8, "0", "50/3"}, {-6, "0", "-16"}}},
        });
        OperatorPoly xp = ordered(1, 1);
        for (const auto& [key, c] : xp.terms) {
            CoeffValue w = c.scaled(GaussianRational(Rational(-128, 3))).shifted({.M = -8});
            w += c.scaled(GaussianRational(48)).shifted({.M = -6});
            o3.add_term(key, w);
        }
        OperatorPoly x2p2 = ordered(2, 2);
        for (const auto& [key, c] : x2p2.terms) {
            CoeffValue w = c.scaled(GaussianRational(0, Rational(64, 3))).shifted({.M = -8});
            w += c.scaled(GaussianRational(0, Rational(-24))).shifted({.M = -6});
            o3.add_term(key, w);
        }
        s.set(3, o3);
    } else {
        s.set(0, mono(1, 0, CoeffValue::integer(1)));
        // -2i M^-2 (XP - i/2)
        OperatorPoly o1(Convention::Scaled);
        OperatorPoly xp = ordered(1, 1);
        xp.add_term({0, 0}, CoeffValue::imaginary(-1, 2));
        for (const auto& [key, c] : xp.terms)
            o1.add_term(key, c.scaled(GaussianRational(0, -2)).shifted({.M = -2}));
        s.set(1, o1);
        // 2 M^-6 P^3 - M^-4 (X^2 P - i X)
        OperatorPoly o2 = mono(3, 0, CoeffValue::integer(2, {.M = -6}));
        OperatorPoly x2p = ordered(2, 1);
        x2p.add_term({0, 1}, CoeffValue::imaginary(-1, 1));
        for (const auto& [key, c] : x2p.terms)
            o2.add_term(key, c.scaled(GaussianRational(-1)).shifted({.M = -4}));
        s.set(2, o2);
        // -i[(16 M^-8 - 16 M^-6)(X P^3 - (3/2) i P^2) + (16 M^-6 - 16 M^-4)(X^3 P - (3/2) i X^2)]
        OperatorPoly block1 = ordered(1, 3);
        block1.add_term({2, 0}, CoeffValue::imaginary(-3, 2));
        OperatorPoly block2 = ordered(3, 1);
        block2.add_term({0, 2}, CoeffValue::imaginary(-3, 2));
        OperatorPoly o3(Convention::Scaled);
        for (const auto& [key, c] : block1.terms) {
            CoeffValue w = c.scaled(GaussianRational(0, -16)).shifted({.M = -8});
            w += c.scaled(GaussianRational(0, 16)).shifted({.M = -6});
            o3.add_term(key, w);
        }
        for (const auto& [key, c] : block2.terms) {
            CoeffValue w = c.scaled(GaussianRational(0, -16)).shifted({.M = -6});
            w += c.scaled(GaussianRational(0, 16)).shifted({.M = -4});
            o3.add_term(key, w);
        }
        s.set(3, o3);
    }
    return s;
}

NPolynomial reference_energy_correction() {
    NPolynomial p;
    p.add(0, CoeffValue::rational(11, 8, {.M = -4}) + CoeffValue::rational(-3, 4));
    p.add(1, CoeffValue::rational(30, 8, {.M = -4}) + CoeffValue::rational(-6, 4));
    p.add(2, CoeffValue::rational(30, 8, {.M = -4}) + CoeffValue::rational(-6, 4));
    return p;
}

OperatorPoly reference_physical_h2_ordered() {
    OperatorPoly f(Convention::Physical);
    f.add_term({0, 4}, CoeffValue::rational(3, 2, {.mu = -2}) + CoeffValue::integer(-1, {.hbar = 2, .mass = 1}));
    f.add_term({0, 0}, CoeffValue::integer(-2, {.hbar = 2, .mass = -1, .mu = -4}));
    f.add_term({1, 1}, CoeffValue::imaginary(-6, 1, {.hbar = 1, .mass = -1, .mu = -4}));
    f.add_term({2, 2}, CoeffValue::integer(-3, {.mass = -1, .mu = -4}));
    return f;
}

OperatorPoly reference_classical(int k) {
    OperatorPoly f(Convention::Physical);
    switch (k) {
        case 0:
            f.add_term({2, 0}, CoeffValue::rational(1, 2, {.mass = -1}));
            f.add_term({0, 2}, CoeffValue::rational(1, 2, {.mu = 2}));
            return f;
        case 2:
            f.add_term({0, 4}, CoeffValue::rational(3, 2, {.mu = -2}));
            f.add_term({2, 2}, CoeffValue::integer(-3, {.mass = -1, .mu = -4}));
            return f;
        default: throw std::out_of_range("no printed classical block for order " + std::to_string(k));
    }
}

TableComparison compare_with_reference(std::string label, OperatorPoly computed, OperatorPoly reference) {
    TableComparison out;
    out.label = std::move(label);
    out.deviation = computed - reference;
    out.computed = std::move(computed);
    out.reference = std::move(reference);
    return out;
}

}  // namespace weylpt
