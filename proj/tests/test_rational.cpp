#include <catch2/catch_amalgamated.hpp>

#include <hookcal/rational.hpp>

using namespace hookcal;

TEST_CASE("make_rational produces canonical form") {
    const Rational r = make_rational(BigInt(6), BigInt(4));
    CHECK(numerator(r) == 3);
    CHECK(denominator(r) == 2);

    const Rational neg = make_rational(BigInt(3), BigInt(-6));
    CHECK(numerator(neg) == -1);
    CHECK(denominator(neg) == 2);

    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays in lowest terms with positive denominator") {
    Rational sum = 0;
    // 1/2 + 1/3 + ... + 1/12
    for (int k = 2; k <= 12; ++k) {
        sum += make_rational(BigInt(1), BigInt(k));
    }
    CHECK(denominator(sum) >= 1);
    CHECK(boost::multiprecision::gcd(numerator(sum), denominator(sum)) == 1);

    const Rational cancel =
        make_rational(BigInt(10), BigInt(3)) * make_rational(BigInt(9), BigInt(5));
    CHECK(numerator(cancel) == 6);
    CHECK(denominator(cancel) == 1);
    CHECK(is_integer(cancel));
}

TEST_CASE("integer powers and factorials") {
    CHECK(int_pow(BigInt(15), 13) == BigInt("1946195068359375"));
    CHECK(int_pow(BigInt(7), 0) == 1);
    CHECK(pow2(14) == 16384);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("fraction strings") {
    CHECK(to_fraction_string(make_rational(BigInt(3), BigInt(2))) == "3/2");
    CHECK(to_fraction_string(Rational(16)) == "16");
    CHECK(to_fraction_string(make_rational(BigInt(-9), BigInt(6))) == "-3/2");
    CHECK(to_decimal_string(int_pow(BigInt(10), 30)) ==
          "1000000000000000000000000000000");
}

TEST_CASE("parse_fraction inverts to_fraction_string") {
    const Rational values[] = {
        Rational(0), Rational(16), make_rational(BigInt(3), BigInt(2)),
        make_rational(BigInt(-7), BigInt(12)),
        make_rational(int_pow(BigInt(201), 100), factorial(50))};
    for (const auto& v : values) {
        CHECK(parse_fraction(to_fraction_string(v)) == v);
    }
    CHECK_THROWS_AS(parse_fraction("three/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
}
