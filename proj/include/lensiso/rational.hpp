#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lensiso/errors.hpp"

namespace lensiso {

// Exact reduced fraction. Denominator is always positive; zero is 0/1.
// Boundary angles are fractions of a full turn, so values stay tiny and
// int64 arithmetic never gets near overflow.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw InvariantError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(Rational a, Rational b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(Rational a, Rational b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(Rational a, Rational b) { return a == b || a < b; }

    // Representative in [0, 1).
    Rational mod1() const {
        std::int64_t r = num % den;
        if (r < 0) r += den;
        return Rational(r, den);
    }

    double to_double() const { return double(num) / double(den); }

    // Canonical text form "num/den" of the reduced fraction.
    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace lensiso
