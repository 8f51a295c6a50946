#include "weylpt/coeff.hpp"

#include <cmath>
#include <sstream>

namespace weylpt {

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return to_string(g.re);
    std::string imag;
    if (g.im == 1)
        imag = "i";
    else if (g.im == -1)
        imag = "-i";
    else
        imag = to_string(g.im) + "*i";
    if (g.re == 0) return imag;
    if (g.im > 0) return to_string(g.re) + "+" + imag;
    return to_string(g.re) + (g.im == -1 ? "-i" : "-" + to_string(-g.im) + "*i");
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int j = 0; j < k; ++j) {
        out *= n - j;
        out /= j + 1;
    }
    return out;
}

BigInt falling_factorial(int n, int k) {
    BigInt out = 1;
    for (int j = 0; j < k; ++j) out *= n - j;
    return out;
}

BigInt factorial(int n) { return falling_factorial(n, n); }

bool CoeffValue::is_real() const {
    for (const auto& [p, v] : terms)
        if (!v.is_real()) return false;
    return true;
}

CoeffValue CoeffValue::conj() const {
    CoeffValue out;
    for (const auto& [p, v] : terms) out.terms.emplace(p, v.conj());
    return out;
}

void CoeffValue::add(const ParamExponents& p, const GaussianRational& v) {
    if (v.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) terms.erase(it);
}

CoeffValue& CoeffValue::operator+=(const CoeffValue& o) {
    for (const auto& [p, v] : o.terms) add(p, v);
    return *this;
}

CoeffValue& CoeffValue::operator-=(const CoeffValue& o) {
    for (const auto& [p, v] : o.terms) add(p, -v);
    return *this;
}

CoeffValue operator*(const CoeffValue& a, const CoeffValue& b) {
    CoeffValue out;
    for (const auto& [pa, va] : a.terms)
        for (const auto& [pb, vb] : b.terms) out.add(pa + pb, va * vb);
    return out;
}

CoeffValue operator-(const CoeffValue& a) {
    CoeffValue out;
    for (const auto& [p, v] : a.terms) out.terms.emplace(p, -v);
    return out;
}

CoeffValue CoeffValue::scaled(const GaussianRational& s) const {
    CoeffValue out;
    if (s.is_zero()) return out;
    for (const auto& [p, v] : terms) {
        GaussianRational w = v * s;
        if (!w.is_zero()) out.terms.emplace(p, w);
    }
    return out;
}

CoeffValue CoeffValue::shifted(const ParamExponents& shift) const {
    CoeffValue out;
    for (const auto& [p, v] : terms) out.terms.emplace(p + shift, v);
    return out;
}

std::complex<double> CoeffValue::eval(const ParamPoint& at) const {
    std::complex<double> tot{0.0, 0.0};
    for (const auto& [p, v] : terms) {
        const double scale = std::pow(at.M, p.M) * std::pow(at.hbar, p.hbar) * std::pow(at.mass, p.mass) *
                             std::pow(at.mu, p.mu);
        tot += std::complex<double>(v.re_double(), v.im_double()) * scale;
    }
    return tot;
}

}  // namespace weylpt
