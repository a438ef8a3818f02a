#pragma once

#include "su3coh/types.hpp"

#include <compare>
#include <numeric>
#include <string>

namespace su3coh {

/// Exact fraction of long long, always normalized with positive denominator.
/// (boost::rational is unusable here: its mixed-type comparisons recurse
/// infinitely under C++20 rewritten candidates.)
struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    constexpr Rational(long long n) : num(n) {}
    constexpr Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw InvalidArgument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    constexpr long long numerator() const { return num; }
    constexpr long long denominator() const { return den; }

    constexpr bool is_integer() const { return den == 1; }
    constexpr long long as_integer() const {
        if (den != 1) throw InvalidArgument("rational " + str() + " is not an integer");
        return num;
    }
    constexpr double to_double() const { return double(num) / double(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw InvalidArgument("rational division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    constexpr Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                      const Rational& b) {
        return static_cast<__int128>(a.num) * b.den <=>
               static_cast<__int128>(b.num) * a.den;
    }
};

} // namespace su3coh
