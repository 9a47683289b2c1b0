#include <doctest.h>

#include <vector>

#include "cuboid/curve.hpp"

#include "support.hpp"

using namespace cuboid;

namespace {

CurvePoint seed_point() {
    return CurvePoint(Rational(-20, 27), Rational(1120, 243));
}

CurveParams seed_curve() {
    return CurveParams::e1(Rational(5, 3));
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("contains on pinned points") {
    CurveParams curve = seed_curve();
    CHECK(contains(curve, seed_point()));
    CHECK(contains(curve, CurvePoint()));
    CHECK_FALSE(contains(curve, CurvePoint(Rational(-20, 27), Rational(1120, 243) + 1)));
}

TEST_CASE("curve factories validate their parameters") {
    for (int bad : {0, 1, -1}) {
        CHECK_THROWS_AS(CurveParams::e1(Rational(bad)), DomainError);
        CHECK_THROWS_AS(CurveParams::e2(Rational(bad)), DomainError);
    }
    CHECK_THROWS_AS(CurveParams::generic(Rational(0), Rational(3)), DomainError);
    CHECK_THROWS_AS(CurveParams::generic(Rational(2), Rational(-2)), DomainError);
    CHECK(CurveParams::e1(Rational(5, 3)).a() == Rational(100, 9));
    CHECK(CurveParams::e1(Rational(5, 3)).b() == Rational(256, 81));
    CHECK(CurveParams::e2(Rational(17, 9)).a() == Rational(43264, 6561));
    CHECK(CurveParams::e2(Rational(17, 9)).b() == Rational(1156, 81));
}

TEST_CASE("identity and inverse laws") {
    CurveParams curve = seed_curve();
    CurvePoint p = seed_point();
    CHECK(add(curve, p, CurvePoint()) == p);
    CHECK(add(curve, CurvePoint(), p) == p);
    CHECK(add(curve, p, negate(p)) == CurvePoint());
}

TEST_CASE("add rejects points off the curve") {
    CurveParams curve = seed_curve();
    CHECK_THROWS_AS(add(curve, seed_point(), CurvePoint(Rational(1), Rational(1))),
                    DomainError);
    CHECK_THROWS_AS(scalar_mul(curve, 2, CurvePoint(Rational(1), Rational(1))), DomainError);
}

// Doubling checked against the chord-tangent geometry itself: with the
// tangent line L(x) = y1 + m(x - x1), the cubic x(x-a)(x+b) - L(x)^2 must be
// exactly (x - x1)^2 (x - x3), i.e. the tangent meets the curve twice at P
// and once at the double's mirror. The slope and x3 below were computed by
// hand from P = (-20/27, 1120/243) on E1(5/3).
TEST_CASE("doubling the seed point matches the tangent-line geometry") {
    CurveParams curve = seed_curve();
    CurvePoint p = seed_point();

    const Rational x1 = p.x();
    const Rational y1 = p.y();
    const Rational m = parse_rational("-593/252");
    const Rational x3 = parse_rational("105625/7056");

    // tangency: m is the implicit-derivative slope at P
    CHECK(2 * y1 * m == 3 * x1 * x1 + 2 * curve.coeff_a2() * x1 + curve.coeff_a4());

    // Vieta: x(x-a)(x+b) - (y1 + m(x - x1))^2 == (x - x1)^2 (x - x3)
    const Rational line_c0 = y1 - m * x1;  // L(x) = m x + line_c0
    const Rational c2 = curve.coeff_a2() - m * m;
    const Rational c1 = curve.coeff_a4() - 2 * m * line_c0;
    const Rational c0 = -line_c0 * line_c0;
    CHECK(c2 == -(2 * x1 + x3));
    CHECK(c1 == x1 * x1 + 2 * x1 * x3);
    CHECK(c0 == -x1 * x1 * x3);

    CurvePoint doubled = scalar_mul(curve, 2, p);
    CHECK(doubled.x() == x3);
    CHECK(doubled.y() == -(m * x3 + line_c0));
    CHECK(contains(curve, doubled));
    CHECK(is_perfect_square(doubled.x()));
    CHECK(exact_sqrt(doubled.x()) == parse_rational("325/84"));
}

TEST_CASE("group axioms on sampled points") {
    CurveParams curve = seed_curve();
    CurvePoint p = seed_point();
    std::vector<CurvePoint> sample{CurvePoint(), p, scalar_mul(curve, 2, p),
                                   scalar_mul(curve, 3, p), negate(p)};
    for (const CurvePoint& pt : torsion_points_e1(Rational(5, 3)))
        sample.push_back(pt);

    for (const CurvePoint& a : sample) {
        CHECK(add(curve, a, CurvePoint()) == a);
        CHECK(add(curve, a, negate(a)) == CurvePoint());
        for (const CurvePoint& b : sample) {
            CurvePoint ab = add(curve, a, b);
            CHECK(contains(curve, ab));
            CHECK(ab == add(curve, b, a));
        }
    }
    // associativity on a few triples
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const CurvePoint& a = sample[i];
        const CurvePoint& b = sample[(i + 3) % sample.size()];
        const CurvePoint& c = sample[(i + 7) % sample.size()];
        CHECK(add(curve, add(curve, a, b), c) == add(curve, a, add(curve, b, c)));
    }
}

TEST_CASE("scalar_mul is linear in n") {
    CurveParams curve = seed_curve();
    CurvePoint p = seed_point();
    CHECK(scalar_mul(curve, 0, p) == CurvePoint());
    CHECK(scalar_mul(curve, 1, p) == p);
    CHECK(scalar_mul(curve, -3, p) == negate(scalar_mul(curve, 3, p)));
    CHECK(scalar_mul(curve, 5, p) ==
          add(curve, scalar_mul(curve, 2, p), scalar_mul(curve, 3, p)));
}

TEST_CASE("torsion list of E1(5/3)") {
    std::vector<CurvePoint> torsion = torsion_points_e1(Rational(5, 3));
    REQUIRE(torsion.size() == 8);
    CurveParams curve = seed_curve();

    std::vector<Rational> expected_x{Rational(0), Rational(100, 9), Rational(-256, 81),
                                     Rational(640, 27), Rational(-40, 27)};
    for (const CurvePoint& pt : torsion) {
        CHECK(contains(curve, pt));
        if (!pt.is_identity()) {
            bool known = false;
            for (const Rational& x : expected_x)
                known = known || pt.x() == x;
            CHECK(known);
        }
    }
    CHECK(std::count_if(torsion.begin(), torsion.end(), [](const CurvePoint& pt) {
              return pt.is_identity();
          }) == 1);
    // the two order-4 points over x = 640/27 carry y = +-21760/243
    int over_640 = 0;
    for (const CurvePoint& pt : torsion) {
        if (!pt.is_identity() && pt.x() == Rational(640, 27)) {
            ++over_640;
            CHECK(abs(pt.y()) == Rational(21760, 243));
        }
    }
    CHECK(over_640 == 2);
    CHECK(std::binary_search(torsion.begin(), torsion.end(),
                             CurvePoint(Rational(0), Rational(0))));
}

TEST_CASE("torsion structure over random parameters") {
    testsupport::Rng rng;
    for (int trial = 0; trial < 25; ++trial) {
        Rational s = rng.curve_parameter(10'000, 10'000);
        CurveParams curve = CurveParams::e1(s);
        std::vector<CurvePoint> torsion = torsion_points_e1(s);
        REQUIRE(torsion.size() == 8);
        for (const CurvePoint& pt : torsion) {
            CHECK(contains(curve, pt));
            if (!pt.is_identity() && pt.y() != 0) {
                CurvePoint twice = add(curve, pt, pt);
                REQUIRE_FALSE(twice.is_identity());
                CHECK(twice.y() == 0);  // order 4 doubles to order 2
                CHECK(add(curve, twice, twice) == CurvePoint());
            }
        }
        // closed under addition: a subgroup of order 8
        for (const CurvePoint& a : torsion)
            for (const CurvePoint& b : torsion)
                CHECK(std::binary_search(torsion.begin(), torsion.end(), add(curve, a, b)));
    }
}

TEST_CASE("torsion lists reject degenerate parameters") {
    for (int bad : {0, 1, -1}) {
        CHECK_THROWS_AS(torsion_points_e1(Rational(bad)), DomainError);
        CHECK_THROWS_AS(torsion_points_e2(Rational(bad)), DomainError);
    }
}

TEST_CASE("torsion list of E2(17/9)") {
    Rational t(17, 9);
    std::vector<CurvePoint> torsion = torsion_points_e2(t);
    REQUIRE(torsion.size() == 8);
    CurveParams curve = CurveParams::e2(t);
    int order4 = 0;
    for (const CurvePoint& pt : torsion) {
        CHECK(contains(curve, pt));
        if (!pt.is_identity() && pt.y() != 0) {
            ++order4;
            bool expected = pt.x() == parse_rational("120224/6561") ||
                            pt.x() == parse_rational("-416/81");
            CHECK(expected);
        }
    }
    CHECK(order4 == 4);
    CHECK(std::binary_search(torsion.begin(), torsion.end(),
                             CurvePoint(Rational(0), Rational(0))));
}

TEST_CASE("is_torsion agrees with the pinned examples") {
    CurveParams curve = seed_curve();
    CHECK(is_torsion(curve, CurvePoint(Rational(640, 27), Rational(21760, 243))));
    CHECK_FALSE(is_torsion(curve, seed_point()));

    CurveParams e1_9 = CurveParams::e1(Rational(9));
    CHECK_FALSE(is_torsion(e1_9, CurvePoint(Rational(3645), Rational(348705))));

    CurveParams generic = CurveParams::generic(Rational(3), Rational(5));
    CHECK_THROWS_AS(is_torsion(generic, CurvePoint()), DomainError);
}

TEST_CASE("torsion_brute_check pinned cases") {
    CurveParams curve = seed_curve();
    CHECK(torsion_brute_check(curve, CurvePoint(Rational(0), Rational(0))));
    CHECK(torsion_brute_check(curve, CurvePoint(Rational(640, 27), Rational(21760, 243))));
    CHECK_FALSE(torsion_brute_check(curve, seed_point()));
    CHECK(torsion_brute_check(curve, CurvePoint()));
}

TEST_CASE("is_torsion agrees with the multiple-of-point oracle") {
    testsupport::Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        Rational s = rng.curve_parameter(50, 50);
        CurveParams curve = CurveParams::e1(s);
        for (const CurvePoint& pt : torsion_points_e1(s))
            CHECK(is_torsion(curve, pt) == torsion_brute_check(curve, pt));
    }
    CurveParams curve = seed_curve();
    CurvePoint p = seed_point();
    CurvePoint acc = p;
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_torsion(curve, acc) == torsion_brute_check(curve, acc));
        CHECK_FALSE(is_torsion(curve, acc));
        acc = add(curve, acc, p);
    }
}

}  // TEST_SUITE
