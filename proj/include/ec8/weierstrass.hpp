#pragma once

// Depressed short Weierstrass model of the factored curve.  With
// s = e1 + e2 + e3, the substitution X = x - s/3, Y = y/2 carries
// y^2 = 4(x-e1)(x-e2)(x-e3) to
//
//     Y^2 = X^3 + A X + B
//
// where A and B are the usual depressed-cubic coefficients.  They are built
// from the elementary symmetric functions of the roots directly, not from
// re-expanded polynomial coefficients, to keep cancellation down.

#include <algorithm>
#include <cmath>

#include "curve.hpp"
#include "errors.hpp"

namespace ec8 {

struct ShortWeierstrass {
    Complex A;
    Complex B;
    Complex shift; // (e1 + e2 + e3) / 3; factored x minus this gives X

    Complex rhs(Complex X) const { return (X * X + A) * X + B; }

    Complex discriminant() const {
        return -16.0 * (4.0 * A * A * A + 27.0 * B * B);
    }
};

inline ShortWeierstrass to_short(const Curve& c) {
    Complex s = c.root_sum();
    Complex p = c.e1() * c.e2() + c.e1() * c.e3() + c.e2() * c.e3();
    Complex q = c.e1() * c.e2() * c.e3();
    ShortWeierstrass sw;
    sw.A = p - s * s / 3.0;
    sw.B = -2.0 * s * s * s / 27.0 + p * s / 3.0 - q;
    sw.shift = s / 3.0;
    return sw;
}

inline double coord_scale(const ShortWeierstrass& sw, Complex X) {
    return std::max({1.0, std::abs(X), std::sqrt(std::abs(sw.A)), std::cbrt(std::abs(sw.B))});
}

inline bool contains(const ShortWeierstrass& sw, const Point& p, Tolerance tol = {}) {
    if (p.is_infinity())
        return true;
    double s = coord_scale(sw, p.x());
    return std::abs(p.y() * p.y() - sw.rhs(p.x())) <= tol.rel * s * s * s;
}

// Factored-model point -> short-model point.
inline Point map_point(const ShortWeierstrass& sw, const Point& p, Tolerance tol = {}) {
    if (p.is_infinity())
        return p;
    Point m = Point::affine(p.x() - sw.shift, p.y() / 2.0);
    if (!contains(sw, m, tol))
        throw OffCurve("map_point: image fails Y^2 = X^3 + A X + B");
    return m;
}

// Short-model point -> factored-model point; inverse of map_point.
inline Point unmap_point(const ShortWeierstrass& sw, const Point& p, Tolerance tol = {}) {
    if (p.is_infinity())
        return p;
    if (!contains(sw, p, tol))
        throw OffCurve("unmap_point: point fails Y^2 = X^3 + A X + B");
    return Point::affine(p.x() + sw.shift, 2.0 * p.y());
}

} // namespace ec8
