#include "heapcurve/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using heapcurve::AffineEndo;
using heapcurve::BigInt;
using heapcurve::CrossedElement;
using heapcurve::LatticeSpec;
using heapcurve::Multiplier;
using heapcurve::QuadraticNumber;
using heapcurve::Rational;
using heapcurve::TorusPoint;

namespace {

const LatticeSpec& gauss() {  // tau = i
    static const LatticeSpec L(Rational(0), Rational(1), 1);
    return L;
}

const LatticeSpec& gauss2() {  // tau = 2i
    static const LatticeSpec L(Rational(0), Rational(2), 1);
    return L;
}

const LatticeSpec& eisenstein() {  // tau = omega = -1/2 + (1/2) sqrt(-3)
    static const LatticeSpec L(Rational(-1, 2), Rational(1, 2), 3);
    return L;
}

Rational random_frac(std::mt19937_64& rng, int max_den) {
    const long long den = static_cast<long long>(rng() % max_den) + 1;
    const long long num = static_cast<long long>(rng() % (4 * max_den + 1)) - 2 * max_den;
    return Rational(num, den);
}

TorusPoint random_point(std::mt19937_64& rng, const LatticeSpec& L, int max_den = 100) {
    return TorusPoint(random_frac(rng, max_den), random_frac(rng, max_den), L);
}

AffineEndo random_endo(std::mt19937_64& rng, const LatticeSpec& L) {
    // Multipliers m + n*g*tau stay inside R(tau) for the generator g.
    const BigInt g = z_pqd_generator(L);
    const long long m = static_cast<long long>(rng() % 11) - 5;
    const long long n = static_cast<long long>(rng() % 11) - 5;
    return AffineEndo(Multiplier(m, BigInt(n) * g, L), random_frac(rng, 12),
                      random_frac(rng, 12));
}

}  // namespace

TEST_CASE("lattice construction validates its parameters", "[lattice]") {
    CHECK_NOTHROW(LatticeSpec(Rational(-1, 2), Rational(1, 2), 3));
    CHECK_THROWS_AS(LatticeSpec(Rational(0), Rational(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(LatticeSpec(Rational(0), Rational(-1), 1), std::invalid_argument);
    CHECK_THROWS_AS(LatticeSpec(Rational(0), Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(LatticeSpec(Rational(0), Rational(1), -3), std::invalid_argument);
    CHECK(gauss().norm() == Rational(1));
    CHECK(gauss2().norm() == Rational(4));
    CHECK(eisenstein().norm() == Rational(1));
    CHECK(eisenstein().two_p() == Rational(-1));
}

TEST_CASE("torus points reduce into the fundamental domain", "[lattice]") {
    const TorusPoint a(Rational(5, 4), Rational(-1, 3), gauss());
    CHECK(a.u() == Rational(1, 4));
    CHECK(a.v() == Rational(2, 3));
    CHECK(TorusPoint(Rational(-2), Rational(7), gauss()) ==
          TorusPoint(Rational(0), Rational(0), gauss()));
}

TEST_CASE("torus heap: frozen case and Mal'cev", "[lattice]") {
    const TorusPoint A(Rational(3, 4), Rational(0), gauss());
    const TorusPoint B(Rational(1, 2), Rational(0), gauss());
    const TorusPoint C(Rational(0), Rational(1, 2), gauss());
    CHECK(torus_heap(A, B, C) == TorusPoint(Rational(1, 4), Rational(1, 2), gauss()));

    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const TorusPoint x = random_point(rng, gauss());
        const TorusPoint y = random_point(rng, gauss());
        CHECK(torus_heap(x, y, y) == x);
        CHECK(torus_heap(y, y, x) == x);
    }
    const TorusPoint other(Rational(0), Rational(0), gauss2());
    CHECK_THROWS_AS(torus_heap(A, B, other), std::invalid_argument);
}

TEST_CASE("torus heap satisfies the abelian heap axioms on random tuples", "[lattice]") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100000; ++i) {
        const TorusPoint a = random_point(rng, eisenstein());
        const TorusPoint b = random_point(rng, eisenstein());
        const TorusPoint c = random_point(rng, eisenstein());
        const TorusPoint d = random_point(rng, eisenstein());
        const TorusPoint e = random_point(rng, eisenstein());
        CHECK(torus_heap(torus_heap(a, b, c), d, e) == torus_heap(a, b, torus_heap(c, d, e)));
        CHECK(torus_heap(a, b, c) == torus_heap(c, b, a));
    }
}

TEST_CASE("multiplier membership constraints", "[lattice]") {
    CHECK_NOTHROW(Multiplier(3, -2, gauss()));
    CHECK_NOTHROW(Multiplier(3, 0, eisenstein()));
    CHECK_NOTHROW(Multiplier(0, 1, eisenstein()));  // R(omega) is the full Z[omega]

    // For tau = 1/3 + (1/3) sqrt(-2): 2p = 2/3 and N = 1/3, so 3 | n.
    const LatticeSpec L(Rational(1, 3), Rational(1, 3), 2);
    CHECK_NOTHROW(Multiplier(1, 3, L));
    CHECK_THROWS_AS(Multiplier(1, 1, L), std::invalid_argument);
    CHECK_THROWS_AS(Multiplier(0, 2, L), std::invalid_argument);
}

TEST_CASE("z_pqd generator: frozen cases", "[lattice]") {
    CHECK(z_pqd_generator(gauss()) == 1);       // Gaussian integers
    CHECK(z_pqd_generator(gauss2()) == 1);      // m + 2ni, all n allowed in tau units
    CHECK(z_pqd_generator(eisenstein()) == 1);  // full Eisenstein ring
    // 2p = 2/3 needs 3 | n, N = 1/3 needs 3 | n.
    CHECK(z_pqd_generator(LatticeSpec(Rational(1, 3), Rational(1, 3), 2)) == 3);
    // Literal negative-d reading: N = 1/4 - 3/4 = -1/2, so 2 | n.
    CHECK(heapcurve::z_generator_formula(Rational(-1, 2), Rational(1, 2), BigInt(-3)) == 2);
}

TEST_CASE("stability oracle: frozen cases", "[lattice]") {
    CHECK(lattice_stability_oracle(gauss(), 5, 0));
    CHECK(lattice_stability_oracle(gauss(), 0, 1));  // i * Lambda(i) = Lambda(i)
    const LatticeSpec L(Rational(1, 3), Rational(1, 3), 2);
    CHECK_FALSE(lattice_stability_oracle(L, 0, 1));  // nN = 1/3 not integral
    CHECK(lattice_stability_oracle(L, 0, 3));
    CHECK(lattice_stability_oracle(L, 7, -24));
}

TEST_CASE("z_pqd generator agrees with the stability oracle", "[lattice]") {
    std::mt19937_64 rng(3);
    std::vector<LatticeSpec> lattices = {gauss(), gauss2(), eisenstein()};
    for (int i = 0; i < 50; ++i) {
        const Rational p = random_frac(rng, 6);
        const Rational q = Rational(static_cast<long long>(rng() % 12) + 1,
                                    static_cast<long long>(rng() % 6) + 1);
        const BigInt d = BigInt(rng() % 6 + 1);
        lattices.emplace_back(p, q, d);
    }
    for (const LatticeSpec& L : lattices) {
        const BigInt g = z_pqd_generator(L);
        for (long long n = -24; n <= 24; ++n) {
            CAPTURE(L.str(), g.str(), n);
            CHECK(lattice_stability_oracle(L, 0, n) == (BigInt(n) % g == 0));
        }
    }
}

TEST_CASE("multiplier product: frozen cases", "[lattice]") {
    // Gaussian law (mm' - nn', mn' + nm').
    const Multiplier a(2, 3, gauss()), b(-1, 4, gauss());
    const Multiplier ab = a * b;
    CHECK(ab.m() == 2 * -1 - 3 * 4);
    CHECK(ab.n() == 2 * 4 + 3 * -1);

    // Unit.
    CHECK(a * Multiplier(1, 0, gauss()) == a);

    // omega^2 = -1 - omega; the oracle is squaring in Q(sqrt(-3)).
    const Multiplier omega(0, 1, eisenstein());
    const Multiplier sq = omega * omega;
    CHECK(sq.m() == -1);
    CHECK(sq.n() == -1);
    CHECK(omega.value() * omega.value() == sq.value());
}

TEST_CASE("multiplier ring: exhaustive closure, associativity, commutativity", "[lattice]") {
    for (const LatticeSpec& L : {gauss(), gauss2(), eisenstein()}) {
        std::vector<Multiplier> elems;
        for (long long m = -10; m <= 10; ++m)
            for (long long n = -10; n <= 10; ++n) elems.emplace_back(m, n, L);
        for (const auto& a : elems)
            for (const auto& b : elems) {
                const Multiplier ab = a * b;  // closure: constructor re-checks membership
                CHECK(ab == b * a);
                CHECK(ab.value() == a.value() * b.value());
            }
        const Multiplier x(3, -2, L), y(-1, 5, L), z(7, 4, L);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("affine endo application: frozen cases", "[lattice]") {
    // Identity.
    const AffineEndo id = AffineEndo::identity(gauss());
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const TorusPoint A = random_point(rng, gauss());
        CHECK(apply(id, A) == A);
    }

    // (1 + i) * 1/2 = 1/2 + (1/2) i.
    const AffineEndo f(Multiplier(1, 1, gauss()), Rational(0), Rational(0));
    const TorusPoint half(Rational(1, 2), Rational(0), gauss());
    CHECK(apply(f, half) == TorusPoint(Rational(1, 2), Rational(1, 2), gauss()));
    // Oracle: multiply in Q(i) and reduce.
    const QuadraticNumber expect = Multiplier(1, 1, gauss()).value() * half.lift();
    CHECK(apply(f, half) == TorusPoint::from_quadratic(expect, gauss()));

    // Constant map.
    const AffineEndo c(Multiplier(0, 0, gauss()), Rational(1, 3), Rational(2, 3));
    for (int i = 0; i < 50; ++i)
        CHECK(apply(c, random_point(rng, gauss())) ==
              TorusPoint(Rational(1, 3), Rational(2, 3), gauss()));
}

TEST_CASE("affine endos are heap endomorphisms", "[lattice]") {
    std::mt19937_64 rng(5);
    for (const LatticeSpec& L : {gauss(), eisenstein()}) {
        for (int i = 0; i < 5000; ++i) {
            const AffineEndo f = random_endo(rng, L);
            const TorusPoint a = random_point(rng, L);
            const TorusPoint b = random_point(rng, L);
            const TorusPoint c = random_point(rng, L);
            CHECK(apply(f, torus_heap(a, b, c)) ==
                  torus_heap(apply(f, a), apply(f, b), apply(f, c)));
        }
    }
}

TEST_CASE("affine endo composition is extensional composition", "[lattice]") {
    std::mt19937_64 rng(6);
    const AffineEndo i_map(Multiplier(0, 1, gauss()), Rational(0), Rational(0));
    const AffineEndo ii = compose(i_map, i_map);
    CHECK(ii.r() == Multiplier(-1, 0, gauss()));  // i o i = -1
    CHECK(ii.cu() == Rational(0));
    CHECK(ii.cv() == Rational(0));

    for (const LatticeSpec& L : {gauss(), gauss2(), eisenstein()}) {
        const AffineEndo id = AffineEndo::identity(L);
        for (int i = 0; i < 3000; ++i) {
            const AffineEndo f = random_endo(rng, L);
            const AffineEndo g = random_endo(rng, L);
            CHECK(compose(id, g) == g);
            CHECK(compose(f, id) == f);
            const TorusPoint A = random_point(rng, L);
            CHECK(apply(compose(f, g), A) == apply(f, apply(g, A)));
        }
    }
}

TEST_CASE("affine endo heap is the pointwise heap", "[lattice]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5000; ++i) {
        const AffineEndo f = random_endo(rng, eisenstein());
        const AffineEndo g = random_endo(rng, eisenstein());
        const AffineEndo h = random_endo(rng, eisenstein());
        CHECK(affine_heap(f, g, g) == f);
        CHECK(affine_heap(f, g, h) == affine_heap(h, g, f));
        const TorusPoint A = random_point(rng, eisenstein());
        CHECK(apply(affine_heap(f, g, h), A) ==
              torus_heap(apply(f, A), apply(g, A), apply(h, A)));
    }
}

TEST_CASE("crossed product: unit, Gaussian law, correspondence", "[lattice]") {
    std::mt19937_64 rng(8);
    const CrossedElement one(Multiplier(1, 0, gauss()),
                             TorusPoint(Rational(0), Rational(0), gauss()));
    for (int i = 0; i < 2000; ++i) {
        const long long m = static_cast<long long>(rng() % 11) - 5;
        const long long n = static_cast<long long>(rng() % 11) - 5;
        const CrossedElement x(Multiplier(m, n, gauss()), random_point(rng, gauss()));
        CHECK(crossed_mul(one, x) == x);
        CHECK(crossed_mul(x, one).r() == x.r());

        const long long m2 = static_cast<long long>(rng() % 11) - 5;
        const long long n2 = static_cast<long long>(rng() % 11) - 5;
        const CrossedElement y(Multiplier(m2, n2, gauss()), random_point(rng, gauss()));
        const CrossedElement xy = crossed_mul(x, y);
        // Published Gaussian form: (mm' - nn', mn' + nm', [(m + in)a' + a]).
        CHECK(xy.r().m() == m * m2 - n * n2);
        CHECK(xy.r().n() == m * n2 + n * m2);
        const QuadraticNumber translated =
            x.r().value() * y.point().lift() + x.point().lift();
        CHECK(xy.point() == TorusPoint::from_quadratic(translated, gauss()));

        // Correspondence with affine-endo composition.
        const AffineEndo composed = compose(x.to_affine(), y.to_affine());
        CHECK(xy.to_affine() == composed);
    }
}

TEST_CASE("crossed heap and both distributivity laws", "[lattice]") {
    std::mt19937_64 rng(9);
    for (const LatticeSpec& L : {gauss(), eisenstein()}) {
        const BigInt g = z_pqd_generator(L);
        auto rand_elem = [&] {
            const long long m = static_cast<long long>(rng() % 11) - 5;
            const long long n = static_cast<long long>(rng() % 11) - 5;
            return CrossedElement(Multiplier(m, BigInt(n) * g, L), random_point(rng, L));
        };
        for (int i = 0; i < 5000; ++i) {
            const CrossedElement a = rand_elem(), b = rand_elem(), c = rand_elem(),
                                 d = rand_elem();
            CHECK(crossed_heap(a, b, b) == a);
            CHECK(crossed_heap(a, b, c) == crossed_heap(c, b, a));
            CHECK(crossed_mul(crossed_mul(a, b), c) == crossed_mul(a, crossed_mul(b, c)));
            CHECK(crossed_mul(a, crossed_heap(b, c, d)) ==
                  crossed_heap(crossed_mul(a, b), crossed_mul(a, c), crossed_mul(a, d)));
            CHECK(crossed_mul(crossed_heap(a, b, c), d) ==
                  crossed_heap(crossed_mul(a, d), crossed_mul(b, d), crossed_mul(c, d)));
        }
    }
}

TEST_CASE("reference-law report: row verdicts", "[lattice]") {
    const heapcurve::ExamplesReport report = heapcurve::examples_report();
    REQUIRE(report.rows.size() == 5);
    CHECK(report.any_mismatch);

    const auto& gauss_row = report.rows[0];
    CHECK_FALSE(gauss_row.has_mismatch());
    CHECK(gauss_row.generator_formula == 1);
    REQUIRE(gauss_row.oracle_generator.has_value());
    CHECK(*gauss_row.oracle_generator == 1);

    const auto& gauss2_row = report.rows[1];
    CHECK_FALSE(gauss2_row.has_mismatch());
    CHECK(gauss2_row.generator_formula == 1);

    const auto& generic_row = report.rows[2];
    CHECK(generic_row.has_mismatch());  // the disputed second component
    CHECK(generic_row.checks[0].match);
    CHECK_FALSE(generic_row.checks[1].match);

    const auto& omega_pos = report.rows[3];
    CHECK(omega_pos.generator_formula == 1);
    CHECK(omega_pos.oracle_agrees);
    CHECK(omega_pos.has_mismatch());  // printed generator 2 vs derived 1

    const auto& omega_lit = report.rows[4];
    CHECK(omega_lit.generator_formula == 2);  // literal reading reproduces 2Z
    CHECK(omega_lit.checks[0].match);          // generator
    CHECK(omega_lit.checks[1].match);          // first component
    CHECK_FALSE(omega_lit.checks[2].match);    // second component
}

TEST_CASE("reference-law report: custom row", "[lattice]") {
    const auto report = heapcurve::examples_report(
        std::array<Rational, 2>{Rational(1, 3), Rational(1, 3)}, BigInt(2));
    REQUIRE(report.rows.size() == 6);
    const auto& custom = report.rows.back();
    CHECK(custom.generator_formula == 3);
    CHECK(custom.oracle_agrees);
    REQUIRE(custom.oracle_generator.has_value());
    CHECK(*custom.oracle_generator == 3);
}
