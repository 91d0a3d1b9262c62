#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diskspec {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) once constructed through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers, and decimals such as "-0.125" or "2.5e-3".
// Decimals convert exactly. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational make_rational(long num, long den = 1);

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);

// Complex number with exact rational parts. Arithmetic is closed and exact.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() = default;
    ExactComplex(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

    ExactComplex conj() const { return {re, -im}; }

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator*(const Rational& s, const ExactComplex& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

using NumericComplex = std::complex<double>;

}  // namespace diskspec
