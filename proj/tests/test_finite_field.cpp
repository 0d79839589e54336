#include "heapcurve/finite_field.hpp"

#include <catch2/catch_amalgamated.hpp>

using heapcurve::Field;
using heapcurve::FieldElement;

TEST_CASE("prime field construction validates p", "[finite_field]") {
    CHECK_NOTHROW(Field::prime(5));
    CHECK_NOTHROW(Field::prime(65521));
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);   // composite
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);   // composite
    CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);   // char 2 excluded
    CHECK_THROWS_AS(Field::prime(3), std::invalid_argument);   // char 3 excluded
    CHECK_THROWS_AS(Field::prime(65537), std::invalid_argument);
}

TEST_CASE("extension construction demands a non-residue", "[finite_field]") {
    CHECK_NOTHROW(Field::quadratic_extension(5, 2));  // 2 is a non-residue mod 5
    CHECK_THROWS_AS(Field::quadratic_extension(5, 4), std::invalid_argument);  // 4 = 2^2
    CHECK_THROWS_AS(Field::quadratic_extension(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::quadratic_extension(13, 3), std::invalid_argument);  // 3 = 4^2
}

TEST_CASE("prime field arithmetic basics", "[finite_field]") {
    const Field f13 = Field::prime(13);
    CHECK(f13.element(7) + f13.element(9) == f13.element(3));
    CHECK(f13.element(5) / f13.element(5) == f13.element(1));
    CHECK(f13.element(-1) == f13.element(12));
    CHECK(-f13.element(0) == f13.element(0));
    CHECK_THROWS_AS(f13.element(1) / f13.element(0), std::domain_error);
}

TEST_CASE("extension arithmetic uses the defining relation t^2 = c", "[finite_field]") {
    const Field f25 = Field::quadratic_extension(5, 2);
    const FieldElement t = f25.element(0, 1);
    CHECK(t * t == f25.element(2));
    CHECK((f25.element(1, 1) * f25.element(1, 4)) == f25.element(1 + 2 * 4, 0));
    CHECK_THROWS_AS(f25.element(0, 0).inverse(), std::domain_error);
}

TEST_CASE("elements of distinct fields never mix", "[finite_field]") {
    const Field f5 = Field::prime(5);
    const Field f7 = Field::prime(7);
    const Field f25 = Field::quadratic_extension(5, 2);
    const Field f25b = Field::quadratic_extension(5, 3);
    CHECK_THROWS_AS(f5.element(1) + f7.element(1), std::invalid_argument);
    CHECK_THROWS_AS(f5.element(1) * f25.element(1), std::invalid_argument);
    CHECK_THROWS_AS(f25.element(1) + f25b.element(1), std::invalid_argument);
    CHECK(f5.element(1) != f7.element(1));
}

TEST_CASE("field axioms hold exhaustively for small fields", "[finite_field]") {
    for (const Field f : {Field::prime(5), Field::prime(7), Field::prime(13),
                          Field::quadratic_extension(5, 2)}) {
        const auto elems = f.elements();
        for (const auto& a : elems) {
            CHECK(a + f.zero() == a);
            CHECK(a * f.one() == a);
            CHECK(a + (-a) == f.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
            for (const auto& b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
            }
        }
        // Associativity and distributivity on all triples.
        for (const auto& a : elems)
            for (const auto& b : elems)
                for (const auto& c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
    }
}

TEST_CASE("square roots by exhaustive scan", "[finite_field]") {
    const Field f13 = Field::prime(13);
    const auto r4 = heapcurve::sqrt(f13.element(4));
    REQUIRE(r4.has_value());
    CHECK(r4->first == f13.element(2));
    CHECK(r4->second == f13.element(11));

    // Oracle: no y in [0, 13) squares to 5.
    bool found = false;
    for (int y = 0; y < 13; ++y)
        if (y * y % 13 == 5) found = true;
    CHECK_FALSE(found);
    CHECK_FALSE(heapcurve::sqrt(f13.element(5)).has_value());

    const auto r0 = heapcurve::sqrt(f13.element(0));
    REQUIRE(r0.has_value());
    CHECK(r0->first == f13.element(0));
    CHECK(r0->second == f13.element(0));

    CHECK_THROWS_AS(heapcurve::sqrt(Field::quadratic_extension(5, 2).element(1)),
                    std::invalid_argument);
}

TEST_CASE("frobenius fixes the prime field", "[finite_field]") {
    const Field f13 = Field::prime(13);
    for (const auto& a : f13.elements()) CHECK(heapcurve::frobenius(a) == a);
}

TEST_CASE("frobenius on F_25 sends t to 4t", "[finite_field]") {
    const Field f25 = Field::quadratic_extension(5, 2);
    const FieldElement t = f25.element(0, 1);
    // Oracle: direct square-and-multiply, t^5 = t * (t^2)^2 = t * 4 = 4t.
    FieldElement direct = f25.one();
    for (int i = 0; i < 5; ++i) direct = direct * t;
    CHECK(direct == f25.element(0, 4));
    CHECK(heapcurve::frobenius(t) == f25.element(0, 4));
    CHECK(heapcurve::frobenius(t) == -t);
}

TEST_CASE("frobenius is a field automorphism of F_25", "[finite_field]") {
    const Field f25 = Field::quadratic_extension(5, 2);
    const auto elems = f25.elements();
    for (const auto& a : elems) {
        CHECK(heapcurve::frobenius(heapcurve::frobenius(a)) == a);
        if (a.c1() == 0) CHECK(heapcurve::frobenius(a) == a);  // base subfield fixed
        for (const auto& b : elems) {
            CHECK(heapcurve::frobenius(a * b) ==
                  heapcurve::frobenius(a) * heapcurve::frobenius(b));
            CHECK(heapcurve::frobenius(a + b) ==
                  heapcurve::frobenius(a) + heapcurve::frobenius(b));
        }
    }
}
