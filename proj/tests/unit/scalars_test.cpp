#include <doctest.h>

#include <random>

#include <protex/io/json_io.hpp>
#include <protex/scalars/field.hpp>

#include "../support/oracles.hpp"

using namespace protex;

namespace {
Magnitude g(Exponent q) { return Magnitude::power(q); }
}

TEST_SUITE("scalars") {

TEST_CASE("magnitude order") {
    CHECK(Magnitude::zero() < g(-5));
    CHECK((g(0) <=> g(0)) == std::strong_ordering::equal);
    CHECK(g(Exponent(1, 2)) > g(Exponent(1, 3)));
    CHECK(Magnitude::zero() == Magnitude());
    CHECK(g(-100) > Magnitude::zero());
    CHECK(max(g(1), Magnitude::zero()) == g(1));
    CHECK(min(g(1), Magnitude::zero()) == Magnitude::zero());
}

TEST_CASE("magnitude multiplication and division") {
    CHECK(g(0) * g(Exponent(7, 3)) == g(Exponent(7, 3)));
    CHECK(Magnitude::zero() * g(7) == Magnitude::zero());
    CHECK(g(Exponent(1, 2)) * g(Exponent(1, 3)) == g(Exponent(5, 6)));
    CHECK(g(3) / g(5) == g(-2));
    CHECK(Magnitude::zero() / g(5) == Magnitude::zero());
    CHECK_THROWS_AS(g(1) / Magnitude::zero(), std::domain_error);
    CHECK_THROWS(Magnitude::zero().exponent());
}

TEST_CASE("magnitude text form") {
    CHECK(Magnitude::zero().str() == "0");
    CHECK(g(0).str() == "g^0");
    CHECK(g(-3).str() == "g^-3");
    CHECK(g(Exponent(2, 4)).str() == "g^1/2");
    CHECK(Magnitude::parse("g^-5/3") == g(Exponent(-5, 3)));
    CHECK(Magnitude::parse("0").is_zero());
    for (auto bad: {"", "g", "g^", "g^2/4", "g^1/1", "g^+1", " g^1", "g^1 ", "x^1", "g^1/0", "g^1/-2", "1", "g^01", "g^-0"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Magnitude::parse(bad), parse_error);
    }
}

TEST_CASE("magnitude properties on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> n(-30, 30), d(1, 12);
    auto rnd = [&] { return rng() % 9 == 0? Magnitude::zero(): g(Exponent(n(rng), d(rng))); };
    for (int s = 0; s < 10000; ++s) {
        auto a = rnd(), b = rnd(), c = rnd();
        // round trip
        REQUIRE(Magnitude::parse(a.str()) == a);
        REQUIRE(Magnitude::parse(a.str()).str() == a.str());
        // monotone multiplication
        if (a <= b) REQUIRE(a * c <= b * c);
        // commutative, associative
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        // total order is antisymmetric and transitive
        if (a <= b && b <= a) REQUIRE(a == b);
        if (a <= b && b <= c) REQUIRE(a <= c);
    }
}

TEST_CASE("prime fields") {
    using F = Fp<5>;
    CHECK(F(3) + F(4) == F(2));
    CHECK(F(2) * F(3) == F(1));
    CHECK(F(1) / F(3) == F(2));
    CHECK(-F(1) == F(4));
    CHECK(F(-7) == F(3));
    CHECK_THROWS_AS(F(0).inverse(), std::domain_error);
    for (int a = 1; a < 5; ++a) CHECK(F(a) * F(a).inverse() == F(1));
    CHECK(scalar_traits<F>::parse("4") == F(4));
    CHECK_THROWS_AS(scalar_traits<F>::parse("5"), parse_error);
    CHECK_THROWS_AS(scalar_traits<F>::parse("x"), parse_error);
    CHECK(scalar_traits<F>::format(F(3)) == "3");
    CHECK(scalar_traits<Fp<2>>::name() == "F2");
}

TEST_CASE("rational scalars") {
    CHECK(scalar_traits<Rational>::parse("-6/4") == Rational(-3, 2));
    CHECK(scalar_traits<Rational>::parse("7") == Rational(7));
    CHECK(scalar_traits<Rational>::format(Rational(-6, 4)) == "-3/2");
    for (auto bad: {"", "1/0", "a", "1/", "/2", "1.5"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(scalar_traits<Rational>::parse(bad), parse_error);
    }
}

TEST_CASE("absolute values") {
    auto q2 = ValuedField<Rational>::padic(2);
    CHECK(q2.abs(Rational(0)) == Magnitude::zero());
    CHECK(q2.abs(Rational(2)) == g(-1));
    CHECK(q2.abs(Rational(12)) == g(-2));
    CHECK(q2.abs(Rational(3, 8)) == g(3));
    CHECK(q2.name() == "Q_2");
    auto triv = ValuedField<Rational>::trivial();
    CHECK(triv.abs(Rational(12)) == g(0));
    CHECK(triv.name() == "Q");
    CHECK(ValuedField<Fp<3>>::trivial().abs(Fp<3>(2)) == g(0));
    CHECK(ValuedField<Fp<3>>::trivial().abs(Fp<3>(0)).is_zero());
    CHECK_THROWS_AS(ValuedField<Rational>::padic(4), invariant_violation);
    CHECK_THROWS_AS(ValuedField<Fp<2>>::padic(2), invariant_violation);
}

TEST_CASE("p-adic absolute value against trial division") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> n(-5000, 5000), d(1, 5000);
    for (unsigned p: {2u, 3u, 5u, 7u}) {
        auto f = ValuedField<Rational>::padic(p);
        for (int s = 0; s < 10000; ++s) {
            auto an = n(rng), ad = d(rng), bn = n(rng), bd = d(rng);
            Rational x(an, ad), y(bn, bd);
            REQUIRE(f.abs(x) == oracle::padic_abs(an, ad, p));
            // ultrametric and multiplicative, exact
            REQUIRE(f.abs(x + y) <= max(f.abs(x), f.abs(y)));
            REQUIRE(f.abs(x * y) == f.abs(x) * f.abs(y));
            REQUIRE((f.abs(x).is_zero() == (x == 0)));
        }
    }
}

TEST_CASE("field specs") {
    auto s = parse_field_spec(json::parse(R"({"padic": 3})"));
    CHECK(s.scalar == "Q");
    CHECK(s.prime == 3);
    CHECK(parse_field_spec(json::parse(R"({"trivial": "F5"})")).scalar == "F5");
    CHECK_THROWS_AS(parse_field_spec(json::parse(R"({"padic": 4})")), parse_error);
    CHECK_THROWS_AS(parse_field_spec(json::parse(R"({"trivial": "F4"})")), parse_error);
    CHECK_THROWS_AS(parse_field_spec(json::parse(R"({"padic": 3, "trivial": "Q"})")), parse_error);
    CHECK_THROWS_AS(parse_field_spec(json::parse(R"("Q")")), parse_error);
    CHECK(field_json(ValuedField<Rational>::padic(2)) == json::parse(R"({"padic": 2})"));
    CHECK(field_json(ValuedField<Fp<2>>::trivial()) == json::parse(R"({"trivial": "F2"})"));
    CHECK_THROWS_AS(parse_field<Fp<2>>(json::parse(R"({"trivial": "F3"})")), parse_error);
}

}
