#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfg/scalar.hpp"

using kfg::Rational;
using kfg::Scalar;

TEST_CASE("field arithmetic in Q(i)") {
    Scalar a(Rational(1, 2), Rational(3, 4));
    Scalar b(Rational(-2), Rational(1, 3));
    CHECK(a + b == Scalar(Rational(-3, 2), Rational(13, 12)));
    CHECK(a - b == Scalar(Rational(5, 2), Rational(5, 12)));
    // (1/2 + 3/4 i)(-2 + 1/3 i) = -1 - 1/4 - 3/2 i + 1/6 i
    CHECK(a * b == Scalar(Rational(-5, 4), Rational(-4, 3)));
    CHECK(a / b == a * b.conj() / Scalar(b.norm()));
    CHECK((a / b) * b == a);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Scalar::one() / Scalar(0), kfg::error);
}

TEST_CASE("powers of i") {
    CHECK(Scalar::i_power(0) == Scalar::one());
    CHECK(Scalar::i_power(1) == Scalar::i());
    CHECK(Scalar::i_power(2) == Scalar(-1));
    CHECK(Scalar::i_power(3) == -Scalar::i());
    CHECK(Scalar::i_power(4) == Scalar::one());
    CHECK(Scalar::i_power(-1) == -Scalar::i());
    CHECK(Scalar::i_power(-2) == Scalar(-1));
    CHECK(Scalar::i_power(7) == -Scalar::i());
}

TEST_CASE("printing") {
    CHECK(Scalar(1).str() == "1");
    CHECK(Scalar(-1).str() == "-1");
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar(Rational(3, 2)).str() == "3/2");
    CHECK(Scalar::i().str() == "1i");
    CHECK((-Scalar::i()).str() == "-1i");
    CHECK(Scalar(Rational(-1, 2), Rational(0)).str() == "-1/2");
    CHECK(Scalar(Rational(3, 2), Rational(1)).str() == "3/2+1i");
    CHECK(Scalar(Rational(0), Rational(-1, 2)).str() == "-1/2i");
    CHECK(Scalar(Rational(2), Rational(-5, 3)).str() == "2-5/3i");
}

TEST_CASE("parsing round-trips") {
    for (const char* s : {"1", "-1", "0", "3/2", "1i", "-1i", "-1/2", "3/2+1i",
                          "-1/2i", "2-5/3i", "7/5-2/9i"}) {
        Scalar v = Scalar::parse(s);
        CHECK(v.str() == s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse(" 2 + 3i ") == Scalar(Rational(2), Rational(3)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Scalar::parse(""), kfg::error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), kfg::error);
    CHECK_THROWS_AS(Scalar::parse("2+"), kfg::error);
    CHECK_THROWS_AS(Scalar::parse("abc"), kfg::error);
    try {
        Scalar::parse("1 + x");
        CHECK(false);
    } catch (const kfg::error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("square roots that exist in Q(i)") {
    auto r = kfg::gaussian_sqrt(Scalar(4));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(4));
    r = kfg::gaussian_sqrt(Scalar(-1));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(-1));
    r = kfg::gaussian_sqrt(Scalar(Rational(9, 4)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(Rational(9, 4)));
    r = kfg::gaussian_sqrt(Scalar(Rational(0), Rational(2)));  // (1+i)^2 = 2i
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(Rational(0), Rational(2)));
    CHECK(!kfg::gaussian_sqrt(Scalar(2)).has_value());
    CHECK(!kfg::gaussian_sqrt(Scalar(Rational(0), Rational(1))).has_value());
}
