#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using ec8::Complex;
using ec8::Curve;
using ec8::Point;
using ec8_test::approx;
using ec8_test::same_point;

namespace {

Curve example_curve() {
    return Curve(Complex(0, 1), Complex(0, 0), Complex(0, -1));
}

} // namespace

TEST_CASE("order2_points double to infinity") {
    Curve c(3.0, 1.0, 0.0);
    auto pts = ec8::order2_points(c);
    CHECK(pts[0].x() == Complex(3.0, 0.0));
    CHECK(pts[1].x() == Complex(1.0, 0.0));
    CHECK(pts[2].x() == Complex(0.0, 0.0));
    for (const Point& p : pts) {
        CHECK(p.y() == Complex(0.0, 0.0));
        CHECK(ec8::dbl(c, p).is_infinity());
        CHECK(ec8::order_of(c, p) == 2);
    }
}

TEST_CASE("order4_points on the example curve") {
    Curve c = example_curve();
    auto pts = ec8::order4_points(c);

    // x = e1 +- gamma = i (1 +- sqrt 2)
    CHECK(approx(pts[0].x(), Complex(0, 2.4142135623730950488), 1e-12));
    CHECK(approx(pts[1].x(), Complex(0, 2.4142135623730950488), 1e-12));
    CHECK(approx(pts[2].x(), Complex(0, -0.4142135623730950488), 1e-12));
    CHECK(approx(pts[3].x(), Complex(0, -0.4142135623730950488), 1e-12));
    CHECK(same_point(pts[1], ec8::negate(pts[0]), 1e-15));
    CHECK(same_point(pts[3], ec8::negate(pts[2]), 1e-15));

    Complex x2p = ec8::dbl(c, ec8::order8_point(c)).x();
    for (const Point& p : pts) {
        CHECK(ec8::contains(c, p));
        CHECK(ec8::order_of(c, p) == 4);
        // doubling lands on a 2-torsion point over e1, never on (e2, 0)
        Point d = ec8::dbl(c, p);
        CHECK(approx(d.y(), Complex(0, 0), 1e-9));
        CHECK(approx(d.x(), Complex(0, 1), 1e-9));
        // and none of them shares an x with 2P, which lies over (e2, 0)
        CHECK(std::abs(p.x() - x2p) > 1e-3);
    }
}

TEST_CASE("order4_points across real-root curves") {
    for (const Curve& c : ec8_test::real_root_family(20, 0xf00du)) {
        auto pts = ec8::order4_points(c);
        for (const Point& p : pts) {
            CHECK(ec8::order_of(c, p) == 4);
            Point d = ec8::dbl(c, p);
            double ctol = ec8::coord_tol(c, d.x(), {1e-6});
            CHECK(std::abs(d.y()) <= ctol);
            // the double sits on (e1, 0) or (e3, 0) but never on (e2, 0)
            bool on_e1 = std::abs(d.x() - c.e1()) <= ctol;
            bool on_e3 = std::abs(d.x() - c.e3()) <= ctol;
            bool on_e2 = std::abs(d.x() - c.e2()) <= ctol;
            CHECK((on_e1 || on_e3));
            CHECK_FALSE(on_e2);
        }
    }
}

TEST_CASE("order8_x frozen reference values") {
    // 50-digit closed-form evaluations, rounded to double
    CHECK(approx(ec8::order8_x(example_curve()),
                 Complex(0.4142135623730950488, -0.91017972112445468261), 1e-13));
    CHECK(approx(ec8::order8_x(Curve(1.0, 0.0, -1.0)),
                 Complex(-0.91017972112445468261, -0.4142135623730950488), 1e-13));
    CHECK(approx(ec8::order8_x(Curve(3.0, 1.0, 0.0)),
                 Complex(0.018638379000958937415, -0.45455618486441289155), 1e-13));
    CHECK(approx(ec8::order8_x(Curve(2.0, 0.0, -2.0)),
                 Complex(-1.8203594422489093652, -0.8284271247461900976), 1e-13));
}

TEST_CASE("order8_x matches its closed form on the example curve") {
    // on (i, 0, -i) the nested radicals collapse to sqrt(2)-1 - i sqrt(2(sqrt(2)-1))
    const double sqrt2 = std::sqrt(2.0);
    Complex expected(sqrt2 - 1.0, -std::sqrt(2.0 * (sqrt2 - 1.0)));
    CHECK(approx(ec8::order8_x(example_curve()), expected, 1e-15));
}

TEST_CASE("order8_x commutes with positive real scaling of the roots") {
    std::mt19937 rng(940);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int i = 0; i < 25; ++i) {
        double t = scale(rng);
        Curve base(3.0, 1.0, 0.0);
        Curve scaled(3.0 * t, 1.0 * t, 0.0);
        CHECK(approx(ec8::order8_x(scaled), t * ec8::order8_x(base), 1e-12));
    }
}

TEST_CASE("order8_point branches are negatives of each other") {
    Curve c(3.0, 1.0, 0.0);
    Point plus = ec8::order8_point(c, +1);
    Point minus = ec8::order8_point(c, -1);
    CHECK(plus.x() == minus.x());
    CHECK(plus.y() == -minus.y());
    CHECK(approx(plus.y(), Complex(2.1694808234483182761, -1.1085083033571535862), 1e-13));
}

TEST_CASE("verify_order8 on the example curve") {
    Curve c = example_curve();
    ec8::Order8Report rep = ec8::verify_order8(c);

    CHECK(rep.beta_assumption_met);
    CHECK(rep.verified_order == 8);
    CHECK(rep.four_p_is_e2);
    CHECK(rep.oracle_confirms);

    REQUIRE(rep.multiples.size() == 8);
    for (int k = 1; k <= 8; ++k) {
        CHECK(rep.multiples[static_cast<size_t>(k - 1)].first == k);
        if (k < 8)
            CHECK_FALSE(rep.multiples[static_cast<size_t>(k - 1)].second.is_infinity());
    }
    CHECK(rep.multiples[7].second.is_infinity());

    // frozen multiples: 2P = (-1, -2 sqrt 2 i), 4P = (0, 0)
    const Point& two_p = rep.multiples[1].second;
    CHECK(approx(two_p.x(), Complex(-1, 0), 1e-12));
    CHECK(approx(two_p.y(), Complex(0, -2.8284271247461900976), 1e-12));
    const Point& four_p = rep.multiples[3].second;
    CHECK(approx(four_p.x(), Complex(0, 0), 1e-10));
    CHECK(approx(four_p.y(), Complex(0, 0), 1e-10));

    // multiples computed by repeated addition match scalar multiplication
    for (int k = 1; k <= 8; ++k)
        CHECK(same_point(rep.multiples[static_cast<size_t>(k - 1)].second,
                         ec8::multiply(c, k, rep.point), 1e-9));
}

TEST_CASE("verify_order8 frozen values on the all-real curve (3, 1, 0)") {
    Curve c(3.0, 1.0, 0.0);
    ec8::TorsionRadicals r = ec8::torsion_radicals(c);
    CHECK(approx(r.beta, Complex(1.2247448713915890491, 0), 1e-13));
    CHECK(approx(r.gamma, Complex(2.4494897427831780982, 0), 1e-13));
    CHECK(approx(r.beta1, Complex(6.1293801044662559637, 0), 1e-13));
    CHECK(approx(r.beta2, Complex(1.7646418680891168193, 0), 1e-13));

    ec8::Order8Report rep = ec8::verify_order8(c);
    CHECK(rep.verified_order == 8);
    CHECK(rep.four_p_is_e2);
    CHECK(rep.oracle_confirms);
    CHECK(rep.beta_assumption_met);

    const Point& two_p = rep.multiples[1].second;
    CHECK(approx(two_p.x(), Complex(1.0, 1.4142135623730950488), 1e-12));
    CHECK(approx(two_p.y(), Complex(4.0, -2.8284271247461900976), 1e-12));
    const Point& four_p = rep.multiples[3].second;
    CHECK(approx(four_p.x(), Complex(1, 0), 1e-10));
    CHECK(approx(four_p.y(), Complex(0, 0), 1e-10));
}

TEST_CASE("verify_order8 across the real-root family") {
    for (const Curve& c : ec8_test::real_root_family(25, 0xbeefu)) {
        ec8::Order8Report rep = ec8::verify_order8(c);
        CHECK(rep.beta_assumption_met);
        CHECK(rep.verified_order == 8);
        CHECK(rep.four_p_is_e2);
        CHECK(rep.oracle_confirms);

        // 2P is order 4 and never sits over (e1, 0): its x differs from both
        // order-4 x-coordinates e1 +- gamma
        Point two_p = ec8::dbl(c, rep.point);
        CHECK(ec8::order_of(c, two_p) == 4);
        auto [beta, gamma] = ec8::beta_gamma(c);
        (void)beta;
        double s = ec8::coord_scale(c, two_p.x());
        CHECK(std::abs(two_p.x() - (c.e1() + gamma)) > 1e-6 * s);
        CHECK(std::abs(two_p.x() - (c.e1() - gamma)) > 1e-6 * s);
    }
}

TEST_CASE("construction still runs when the beta assumption fails") {
    // complex roots make beta complex; nothing is promised about the order,
    // but the report must be complete and the two certification routes must
    // agree with each other
    Curve c(Complex(1, 1), Complex(0, 0), Complex(1, -1));
    ec8::Order8Report rep = ec8::verify_order8(c);
    CHECK_FALSE(rep.beta_assumption_met);
    CHECK(ec8::contains(c, rep.point));
    CHECK(rep.multiples.size() == 8);
    CHECK(rep.oracle_confirms == (rep.verified_order == 8));
}
