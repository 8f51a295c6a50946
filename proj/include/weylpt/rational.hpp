#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace weylpt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact complex rational a + b*i. Every coefficient in the engine is one of
// these; no floating point enters until the numeric module evaluates things.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational ratio(long num, long den) { return GaussianRational(Rational(num, den)); }
    static GaussianRational imaginary(Rational v = 1) { return GaussianRational(0, std::move(v)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    double re_double() const { return re.convert_to<double>(); }
    double im_double() const { return im.convert_to<double>(); }
};

std::string to_string(const Rational& q);          // "num/den", "num" when den == 1
std::string to_string(const GaussianRational& g);  // "a", "i", "-i", "b*i", "a+b*i", "a-b*i"

inline Rational rational_pow(Rational base, int exp) {
    if (exp < 0) {
        base = Rational(boost::multiprecision::denominator(base), boost::multiprecision::numerator(base));
        exp = -exp;
    }
    Rational out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

BigInt binomial(int n, int k);
BigInt falling_factorial(int n, int k);  // n(n-1)...(n-k+1)
BigInt factorial(int n);

}  // namespace weylpt
