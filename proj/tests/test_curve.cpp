#include "heapcurve/curve.hpp"

#include "heapcurve/axioms.hpp"
#include "support/classical_law.hpp"

#include <catch2/catch_amalgamated.hpp>

using heapcurve::Carrier;
using heapcurve::CheckMode;
using heapcurve::CurvePoint;
using heapcurve::Field;
using heapcurve::FieldElement;
using heapcurve::WeierstrassCurve;

namespace {

WeierstrassCurve f5_curve() {
    // y^2 = x^3 - x over F_5 (a = 4, b = 0), the 8-point workhorse.
    const Field f = Field::prime(5);
    return WeierstrassCurve(f.element(-1), f.element(0));
}

WeierstrassCurve f13_curve() {
    const Field f = Field::prime(13);
    return WeierstrassCurve(f.element(1), f.element(1));
}

Carrier<CurvePoint> heap_carrier(const WeierstrassCurve& curve) {
    Carrier<CurvePoint> c;
    c.elements = curve.points();
    c.ternary = [curve](const CurvePoint& a, const CurvePoint& b, const CurvePoint& d) {
        return heap_op(curve, a, b, d);
    };
    c.equal = [](const CurvePoint& a, const CurvePoint& b) { return a == b; };
    c.label = [](const CurvePoint& a) { return a.str(); };
    return c;
}

}  // namespace

TEST_CASE("singular curves are rejected", "[curve]") {
    const Field f5 = Field::prime(5);
    CHECK_THROWS_AS(WeierstrassCurve(f5.element(0), f5.element(0)), std::invalid_argument);
    // a = -3, b = 2 has 4*(-27) + 27*4 = 0 over any field.
    const Field f7 = Field::prime(7);
    CHECK_THROWS_AS(WeierstrassCurve(f7.element(-3), f7.element(2)), std::invalid_argument);
    CHECK_THROWS_AS(WeierstrassCurve(f5.element(1), Field::prime(7).element(1)),
                    std::invalid_argument);
}

TEST_CASE("point construction checks the curve equation", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    CHECK_NOTHROW(e.point(2, 1));
    CHECK_THROWS_AS(e.point(2, 2), std::invalid_argument);
    CHECK(e.contains(e.field().element(2), e.field().element(1)));
    CHECK_FALSE(e.contains(e.field().element(2), e.field().element(2)));
    // Points with y = 0 at roots of x^3 + ax + b.
    CHECK_NOTHROW(e.point(0, 0));
    CHECK_NOTHROW(e.point(1, 0));
    CHECK_NOTHROW(e.point(4, 0));
}

TEST_CASE("long-form conversion over F_13", "[curve]") {
    const Field f13 = Field::prime(13);

    // g2 = 4, g3 = 0: a = -4/4 = -1 = 12, b = 0.
    const WeierstrassCurve e1 = WeierstrassCurve::from_long_form(f13.element(4), f13.element(0));
    CHECK(e1.a() == f13.element(12));
    CHECK(e1.b() == f13.element(0));

    // g2 = 0, g3 = 9: a = 0, b = -9/4.
    const WeierstrassCurve e2 = WeierstrassCurve::from_long_form(f13.element(0), f13.element(9));
    CHECK(e2.a() == f13.element(0));
    CHECK(e2.b() == -(f13.element(9) / f13.element(4)));

    // Oracle: (x, y) satisfies y^2 = 4x^3 - g2 x - g3 iff (x, y/2) lies on the
    // short form, exhaustively over F_13 x F_13, for both conversions.
    struct Case {
        FieldElement g2, g3;
        const WeierstrassCurve* curve;
    };
    const Case cases[] = {{f13.element(4), f13.element(0), &e1},
                          {f13.element(0), f13.element(9), &e2}};
    const FieldElement half = f13.element(2).inverse();
    for (const auto& c : cases)
        for (int xi = 0; xi < 13; ++xi)
            for (int yi = 0; yi < 13; ++yi) {
                const FieldElement x = f13.element(xi);
                const FieldElement y = f13.element(yi);
                const bool on_long =
                    y * y == f13.element(4) * x * x * x - c.g2 * x - c.g3;
                const bool on_short = c.curve->contains(x, y * half);
                CHECK(on_long == on_short);
            }

    // Singular long form: g2 = g3 = 0 has g2^3 = 27 g3^2.
    CHECK_THROWS_AS(WeierstrassCurve::from_long_form(f13.element(0), f13.element(0)),
                    std::invalid_argument);
}

TEST_CASE("point enumeration of the F_5 curve", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const auto pts = e.points();
    REQUIRE(pts.size() == 8);
    CHECK(pts[0].is_infinity());

    // Oracle: independent scan over all of F_5 x F_5.
    std::vector<CurvePoint> scanned;
    scanned.push_back(CurvePoint::infinity());
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            if (e.contains(e.field().element(x), e.field().element(y)))
                scanned.push_back(e.point(x, y));
    REQUIRE(scanned.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(pts[i] == scanned[i]);

    const CurvePoint expected[] = {CurvePoint::infinity(), e.point(0, 0), e.point(1, 0),
                                   e.point(2, 1),          e.point(2, 4), e.point(3, 2),
                                   e.point(3, 3),          e.point(4, 0)};
    for (std::size_t i = 0; i < 8; ++i) CHECK(pts[i] == expected[i]);
}

TEST_CASE("point counts satisfy the Hasse bound", "[curve]") {
    const auto n13 = f13_curve().points().size();
    // Oracle: quadratic-character count, #E = p + 1 + sum_x chi(x^3 + ax + b).
    const Field f13 = Field::prime(13);
    long long chi_sum = 0;
    for (int x = 0; x < 13; ++x) {
        const FieldElement v = f13_curve().rhs(f13.element(x));
        if (v.is_zero()) continue;
        chi_sum += v.pow(6) == f13.one() ? 1 : -1;
    }
    CHECK(n13 == static_cast<std::size_t>(13 + 1 + chi_sum));
    CHECK(n13 == 18);

    const long long t = static_cast<long long>(n13) - 14;
    CHECK(t * t <= 4 * 13);
}

TEST_CASE("third intersection: frozen cases", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    // Chord through (2,1) and (3,2): lambda = 1, x3 = 1, y3 = 0; the oracle
    // scan over the curve finds exactly (1,0) as the remaining point of the
    // line y = x - 1.
    CHECK(third_intersection(e, e.point(2, 1), e.point(3, 2)) == e.point(1, 0));
    int on_line = 0;
    for (const CurvePoint& p : e.points()) {
        if (p.is_infinity()) continue;
        if (p.y() == p.x() - e.field().element(1)) ++on_line;
    }
    CHECK(on_line == 3);

    // Vertical line through P and infinity reflects P.
    CHECK(third_intersection(e, e.point(2, 1), CurvePoint::infinity()) == e.point(2, 4));
    CHECK(third_intersection(e, CurvePoint::infinity(), e.point(2, 1)) == e.point(2, 4));
    // Vertical tangent at a 2-torsion point.
    CHECK(third_intersection(e, e.point(1, 0), e.point(1, 0)).is_infinity());
    // Line at infinity.
    CHECK(third_intersection(e, CurvePoint::infinity(), CurvePoint::infinity()).is_infinity());
    // Vertical chord.
    CHECK(third_intersection(e, e.point(2, 1), e.point(2, 4)).is_infinity());

    CHECK_THROWS_AS(third_intersection(e, e.point(2, 1), f13_curve().point(0, 1)),
                    std::invalid_argument);
}

TEST_CASE("third intersection is symmetric and closes lines", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const auto pts = e.points();
    for (const CurvePoint& p : pts)
        for (const CurvePoint& q : pts) {
            const CurvePoint r = third_intersection(e, p, q);
            CHECK(third_intersection(e, q, p) == r);
            CHECK(e.contains(r));
            if (!p.is_infinity() && !q.is_infinity() && p != q && p.x() != q.x() &&
                !r.is_infinity()) {
                // Collinearity: all three satisfy y = y1 + lambda (x - x1).
                const FieldElement lambda = (q.y() - p.y()) / (q.x() - p.x());
                CHECK(r.y() == p.y() + lambda * (r.x() - p.x()));
            }
        }
}

TEST_CASE("heap operation: frozen cases and Mal'cev identities", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const auto pts = e.points();

    // [(2,1),(1,0),(3,2)]: D = third((2,1),(3,2)) = (1,0) = B, so the tangent
    // at (1,0) is vertical and the result is infinity. Classical oracle:
    // A - B + C = (2,1) - (1,0) + (3,2) = infinity.
    const CurvePoint a = e.point(2, 1), b = e.point(1, 0), c = e.point(3, 2);
    const CurvePoint oracle =
        classical::add(e, classical::sub(e, a, b), c);
    CHECK(oracle.is_infinity());
    CHECK(heap_op(e, a, b, c) == oracle);

    for (const CurvePoint& A : pts)
        for (const CurvePoint& B : pts) {
            CHECK(heap_op(e, A, B, B) == A);
            CHECK(heap_op(e, B, B, A) == A);
        }
}

TEST_CASE("heap axioms hold exhaustively on small curves", "[curve]") {
    for (const WeierstrassCurve& e : {f5_curve(), f13_curve()}) {
        const auto reports = heapcurve::check_heap_axioms(heap_carrier(e), CheckMode::exhaustive());
        REQUIRE(reports.size() == 3);
        for (const auto& r : reports) {
            INFO(r.axiom);
            CHECK(r.pass);
        }
        const std::size_t n = e.points().size();
        CHECK(reports[0].cases == n * n * n * n * n);
        CHECK(reports[1].cases == n * n);
        CHECK(reports[2].cases == n * n * n);
    }
}

TEST_CASE("heap axioms on a ~40-point curve: sampled 5-tuples, exhaustive triples", "[curve]") {
    const Field f37 = Field::prime(37);
    const WeierstrassCurve e(f37.element(2), f37.element(1));
    const std::size_t n = e.points().size();
    REQUIRE(n >= 26);
    REQUIRE(n <= 50);
    const auto reports =
        heapcurve::check_heap_axioms(heap_carrier(e), CheckMode::automatic(100000, 17));
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].mode == "sampled(100000, seed=17)");
    CHECK(reports[1].mode == "exhaustive");
    CHECK(reports[2].mode == "exhaustive");
    for (const auto& r : reports) {
        INFO(r.axiom);
        CHECK(r.pass);
    }
}

TEST_CASE("retract equivalence: heap equals A - B + C at every base point", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const auto pts = e.points();
    for (const CurvePoint& O : pts)
        for (const CurvePoint& A : pts)
            for (const CurvePoint& B : pts)
                for (const CurvePoint& C : pts) {
                    const CurvePoint lhs = heap_op(e, A, B, C);
                    const CurvePoint rhs = retract_add(
                        e, O, retract_add(e, O, A, retract_neg(e, O, B)), C);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("retract at infinity matches the classical group law", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const CurvePoint O = CurvePoint::infinity();
    const auto pts = e.points();
    CHECK(retract_add(e, O, e.point(2, 1), e.point(3, 2)) == e.point(1, 0));
    CHECK(classical::add(e, e.point(2, 1), e.point(3, 2)) == e.point(1, 0));
    for (const CurvePoint& A : pts) {
        CHECK(retract_neg(e, O, A) == classical::neg(e, A));
        for (const CurvePoint& B : pts) CHECK(retract_add(e, O, A, B) == classical::add(e, A, B));
    }
}

TEST_CASE("every retract is an abelian group", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const auto pts = e.points();
    for (const CurvePoint& O : pts) {
        for (const CurvePoint& A : pts) {
            CHECK(retract_add(e, O, A, O) == A);
            CHECK(retract_add(e, O, O, A) == A);
            CHECK(retract_add(e, O, A, retract_neg(e, O, A)) == O);
        }
        for (const CurvePoint& A : pts)
            for (const CurvePoint& B : pts) {
                CHECK(retract_add(e, O, A, B) == retract_add(e, O, B, A));
                for (const CurvePoint& C : pts)
                    CHECK(retract_add(e, O, retract_add(e, O, A, B), C) ==
                          retract_add(e, O, A, retract_add(e, O, B, C)));
            }
    }
}

TEST_CASE("scalar multiplication in the retract", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const CurvePoint O = CurvePoint::infinity();
    const auto pts = e.points();
    const long long order = static_cast<long long>(pts.size());
    for (const CurvePoint& A : pts) {
        CHECK(scalar_mul(e, O, 0, A) == O);
        CHECK(scalar_mul(e, O, 1, A) == A);
        CHECK(scalar_mul(e, O, order, A) == O);  // Lagrange
        CHECK(scalar_mul(e, O, -1, A) == retract_neg(e, O, A));
        for (long long n = -5; n <= 5; ++n)
            CHECK(scalar_mul(e, O, n, A) == classical::smul(e, n, A));
    }
    // Lagrange at a non-standard base point too.
    const CurvePoint O2 = e.point(0, 0);
    for (const CurvePoint& A : pts) CHECK(scalar_mul(e, O2, order, A) == O2);
}

TEST_CASE("translation isomorphism between retracts", "[curve]") {
    const WeierstrassCurve e = f5_curve();
    const auto pts = e.points();
    const CurvePoint O = CurvePoint::infinity();
    const CurvePoint O2 = e.point(0, 0);

    CHECK(translation_iso(e, O, O, e.point(2, 1)) == e.point(2, 1));
    CHECK(translation_iso(e, O, O2, O) == O2);

    for (const CurvePoint& A : pts)
        for (const CurvePoint& B : pts) {
            const CurvePoint lhs = translation_iso(e, O, O2, retract_add(e, O, A, B));
            const CurvePoint rhs = retract_add(e, O2, translation_iso(e, O, O2, A),
                                               translation_iso(e, O, O2, B));
            CHECK(lhs == rhs);
        }
}
