#pragma once

#include "weylpt/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>

namespace weylpt {

// Signed exponents of the four named parameters a coefficient can carry.
// Order here fixes the canonical ordering everywhere (render, JSON, compare).
struct ParamExponents {
    int M = 0;
    int hbar = 0;
    int mass = 0;
    int mu = 0;

    friend auto operator<=>(const ParamExponents&, const ParamExponents&) = default;

    ParamExponents operator+(const ParamExponents& o) const {
        return {M + o.M, hbar + o.hbar, mass + o.mass, mu + o.mu};
    }
    bool trivial() const { return M == 0 && hbar == 0 && mass == 0 && mu == 0; }
};

inline constexpr std::array<const char*, 4> kParamNames = {"M", "hbar", "mass", "mu"};

// Numeric evaluation point for the four parameters.
struct ParamPoint {
    double M = 1.0;
    double hbar = 1.0;
    double mass = 1.0;
    double mu = 1.0;
};

// Exact Laurent multinomial: finite sum of GaussianRational * M^a hbar^b mass^c mu^d.
// Canonical form never stores a zero coefficient.
class CoeffValue {
  public:
    std::map<ParamExponents, GaussianRational> terms;

    CoeffValue() = default;
    CoeffValue(GaussianRational v, ParamExponents p = {}) {
        if (!v.is_zero()) terms.emplace(p, std::move(v));
    }
    static CoeffValue rational(long num, long den, ParamExponents p = {}) {
        return CoeffValue(GaussianRational::ratio(num, den), p);
    }
    static CoeffValue integer(long v, ParamExponents p = {}) { return CoeffValue(GaussianRational(v), p); }
    static CoeffValue imaginary(long num, long den, ParamExponents p = {}) {
        return CoeffValue(GaussianRational(0, Rational(num, den)), p);
    }

    bool is_zero() const { return terms.empty(); }
    bool is_real() const;
    CoeffValue conj() const;

    void add(const ParamExponents& p, const GaussianRational& v);
    CoeffValue& operator+=(const CoeffValue& o);
    CoeffValue& operator-=(const CoeffValue& o);
    friend CoeffValue operator+(CoeffValue a, const CoeffValue& b) { return a += b; }
    friend CoeffValue operator-(CoeffValue a, const CoeffValue& b) { return a -= b; }
    friend CoeffValue operator*(const CoeffValue& a, const CoeffValue& b);
    friend CoeffValue operator-(const CoeffValue& a);
    CoeffValue scaled(const GaussianRational& s) const;
    // Adds the given exponents to every term (multiplication by a parameter power).
    CoeffValue shifted(const ParamExponents& shift) const;
    friend bool operator==(const CoeffValue& a, const CoeffValue& b) = default;

    std::complex<double> eval(const ParamPoint& at) const;
};

}  // namespace weylpt
