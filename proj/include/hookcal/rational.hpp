#pragma once

// Exact arbitrary-precision arithmetic. Every number in the library is a
// BigInt or a Rational; floating point is never used, so identity checks
// are exact equalities.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hookcal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in canonical form: lowest terms, denominator >= 1.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational r(num);
    r /= Rational(den);
    return r;
}

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigInt pow2(unsigned n) {
    return BigInt(1) << n;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline std::string to_decimal_string(const BigInt& v) {
    return v.str();
}

/// "p" for integers, "p/q" otherwise; q is always positive.
inline std::string to_fraction_string(const Rational& r) {
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Inverse of to_fraction_string. Accepts "p" and "p/q".
inline Rational parse_fraction(std::string_view text) {
    const auto parse_int = [&](std::string_view part) {
        auto digits = part;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            digits.remove_prefix(1);
        }
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument(
                std::string("parse_fraction: bad input '") + std::string(text) +
                "'");
        }
        return BigInt(std::string(part));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return make_rational(parse_int(text.substr(0, slash)),
                         parse_int(text.substr(slash + 1)));
}

}  // namespace hookcal
