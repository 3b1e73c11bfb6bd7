#pragma once

#include "consim/rational.hpp"

#include <string>

namespace consim {

// Complex number with rational real and imaginary parts. All arithmetic is
// exact; equality means exact equality of both parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussianRational(Rational real) : re(std::move(real)) {}
    explicit GaussianRational(long long real) : re(real) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(Rational(1)); }
    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    // re^2 + im^2, the squared modulus; rational and nonnegative.
    Rational norm() const { return re * re + im * im; }

    GaussianRational inverse() const;  // throws SingularError on zero

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re + b.re, a.im + b.im);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re - b.re, a.im - b.im);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re, -a.im);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
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
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    // Human-readable form, e.g. "1/2+3/4i"; the serialized JSON form lives in json_io.
    std::string str() const;
};

GaussianRational conj(const GaussianRational& z);

}  // namespace consim
