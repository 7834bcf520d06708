#pragma once

// Torsion-point constructions on y^2 = 4(x-e1)(x-e2)(x-e3): the three
// 2-torsion points, the order-4 points over (e1, 0), and an explicit order-8
// point assembled from nested radicals of the roots.  verify_order8 then
// certifies the order two independent ways — a group-law order search and
// the division-polynomial oracle on the short model.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "division_poly.hpp"
#include "radicals.hpp"
#include "weierstrass.hpp"

namespace ec8 {

inline std::array<Point, 3> order2_points(const Curve& c) {
    return {Point::affine(c.e1(), 0.0), Point::affine(c.e2(), 0.0), Point::affine(c.e3(), 0.0)};
}

// The four points with x = e1 +- gamma, both y branches.  Doubling any of
// them lands on a 2-torsion point, never on (e2, 0).
inline std::array<Point, 4> order4_points(const Curve& c) {
    auto [beta, gamma] = beta_gamma(c);
    (void)beta;
    std::array<Point, 4> out;
    int k = 0;
    for (Complex x : {c.e1() + gamma, c.e1() - gamma}) {
        Complex y = y_from_x(c, x, +1);
        out[static_cast<size_t>(k++)] = Point::affine(x, y);
        out[static_cast<size_t>(k++)] = Point::affine(x, -y);
    }
    return out;
}

// x-coordinate of the order-8 point:
//
//   x = e1 - gamma - gamma (sqrt((beta+1)/2) - 1) *
//       [ 1 - 1/beta + sqrt(1 + 1/beta) *
//         ( sqrt(beta1 + beta2) + i (sqrt(beta1 - beta2) + sqrt(1 - 1/beta)) ) ]
//
// with every square root principal.  The whole trailing bracket is one
// factor of the single product that starts at gamma (sqrt((beta+1)/2) - 1).
inline Complex order8_x(const Curve& c) {
    TorsionRadicals r = torsion_radicals(c);
    const Complex i(0.0, 1.0);
    Complex inner = principal_sqrt(r.beta1 + r.beta2)
                  + i * (principal_sqrt(r.beta1 - r.beta2) + principal_sqrt(1.0 - 1.0 / r.beta));
    Complex bracket = 1.0 - 1.0 / r.beta + principal_sqrt(1.0 + 1.0 / r.beta) * inner;
    return c.e1() - r.gamma - r.gamma * (principal_sqrt((r.beta + 1.0) / 2.0) - 1.0) * bracket;
}

inline Point order8_point(const Curve& c, int branch = +1) {
    return point_from_x(c, order8_x(c), branch);
}

struct Order8Report {
    Point point;                                  // the constructed point P
    std::vector<std::pair<int, Point>> multiples; // (k, kP) for k = 1..8
    std::optional<int> verified_order;            // group-law order search
    bool four_p_is_e2 = false;                    // 4P = (e2, 0) within tolerance
    bool oracle_confirms = false;                 // division polynomials say order 8
    bool beta_assumption_met = false;             // beta real and > 1
};

inline Order8Report verify_order8(const Curve& c, Tolerance tol = {}, int branch = +1) {
    Order8Report rep;
    auto [beta, gamma] = beta_gamma(c);
    (void)gamma;
    rep.beta_assumption_met = ec8::beta_assumption_met(beta, tol);

    Point p = order8_point(c, branch);
    rep.point = p;
    Point acc = Point::infinity();
    for (int k = 1; k <= 8; ++k) {
        acc = add(c, acc, p, tol);
        rep.multiples.emplace_back(k, acc);
    }
    rep.verified_order = order_of(c, p, 16, tol);

    const Point& four_p = rep.multiples[3].second;
    if (!four_p.is_infinity()) {
        double ctol = coord_tol(c, four_p.x(), tol);
        rep.four_p_is_e2 = std::abs(four_p.x() - c.e2()) <= ctol && std::abs(four_p.y()) <= ctol;
    }

    ShortWeierstrass sw = to_short(c);
    rep.oracle_confirms = is_order_exactly_8(sw, map_point(sw, p, tol), tol);
    return rep;
}

} // namespace ec8
