#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "syzkit/errors.hpp"

namespace syzkit {

// Exact rational scalar. mpq_class keeps the canonical form invariant
// (positive denominator, reduced fraction, 0 stored as 0/1) through all
// arithmetic, provided explicitly constructed values are canonicalized.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Element of Q(i), the field where all point evaluations happen.
struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, Rational(-im)}; }
    // |z|^2, always a rational.
    Rational norm() const { return Rational(re * re + im * im); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero in Q(i)");
        Rational n = b.norm();
        GaussianRational num = a * b.conj();
        return {Rational(num.re / n), Rational(num.im / n)};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    bool is_real() const { return im == 0; }
};

GaussianRational parse_gaussian(const std::string& text);
std::string format_gaussian(const GaussianRational& z);

GaussianRational gaussian_pow(const GaussianRational& z, unsigned e);

}  // namespace syzkit
