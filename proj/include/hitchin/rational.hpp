#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hitchin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Element of Q(i), the field all branch decisions are made in.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int n) : re(n) {}
    GaussianRational(long n) : re(n) {}
    GaussianRational(long long n) : re(n) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

inline GaussianRational gr(long num, long den = 1) { return {Rational(num, den)}; }
inline GaussianRational gri(long num_re, long den_re, long num_im, long den_im) {
    return {Rational(num_re, den_re), Rational(num_im, den_im)};
}

inline GaussianRational pow(const GaussianRational& base, unsigned e) {
    GaussianRational acc(1);
    GaussianRational b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string to_string(const GaussianRational& g);

inline std::string to_string(const Rational& r) { return r.str(); }

// Ceiling of an exact rational.
inline Integer rational_ceil(const Rational& r) {
    Integer n = numerator(r), d = denominator(r);  // d > 0 canonical
    Integer q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace hitchin
