#pragma once

// Chord-tangent group law on the factored model
//
//     y^2 = 4 (x - e1) (x - e2) (x - e3)
//
// over the complex numbers.  The leading coefficient 4 changes the usual
// slope algebra: a line y = lambda x + mu meets the curve where
// 4 prod(x - ei) - (lambda x + mu)^2 = 0, so the three intersection
// abscissae sum to e1 + e2 + e3 + lambda^2 / 4.
//
// The point at infinity is an explicit variant, never a coordinate encoding,
// and equality against it is decided only by the vertical-chord and
// vertical-tangent tests below.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "complex_ops.hpp"
#include "errors.hpp"

namespace ec8 {

// Relative comparison policy.  With S = max(1, |e1|, |e2|, |e3|, |x| of the
// points involved), coordinates are compared to rel * S and curve residuals
// |y^2 - rhs(x)| to rel * S^3 (the residual is cubic in the coordinate
// scale).  rel = 1e-9 balances double round-off against the accumulated
// error of a handful of chained group operations.
struct Tolerance {
    double rel = 1e-9;
};

class Curve {
public:
    Curve(Complex e1, Complex e2, Complex e3) : e1_(e1), e2_(e2), e3_(e3) {
        if (e1 == e2 || e1 == e3 || e2 == e3)
            throw DegenerateCurve("coincident roots: 4(x-e1)(x-e2)(x-e3) is singular");
    }

    Complex e1() const { return e1_; }
    Complex e2() const { return e2_; }
    Complex e3() const { return e3_; }

    Complex root_sum() const { return e1_ + e2_ + e3_; }

    // 4 (x - e1)(x - e2)(x - e3)
    Complex rhs(Complex x) const {
        return 4.0 * (x - e1_) * (x - e2_) * (x - e3_);
    }

    // d/dx of rhs, as a sum of products so no expanded coefficients appear
    Complex rhs_prime(Complex x) const {
        return 4.0 * ((x - e2_) * (x - e3_) + (x - e1_) * (x - e3_) + (x - e1_) * (x - e2_));
    }

private:
    Complex e1_, e2_, e3_;
};

class Point {
public:
    Point() : finite_(false) {}

    static Point infinity() { return Point(); }
    static Point affine(Complex x, Complex y) { return Point(x, y); }

    bool is_infinity() const { return !finite_; }

    // Meaningful only for affine points.
    Complex x() const { return x_; }
    Complex y() const { return y_; }

private:
    Point(Complex x, Complex y) : x_(x), y_(y), finite_(true) {}

    Complex x_{}, y_{};
    bool finite_;
};

inline double coord_scale(const Curve& c) {
    return std::max({1.0, std::abs(c.e1()), std::abs(c.e2()), std::abs(c.e3())});
}

inline double coord_scale(const Curve& c, Complex x) {
    return std::max(coord_scale(c), std::abs(x));
}

inline double coord_scale(const Curve& c, Complex x1, Complex x2) {
    return std::max({coord_scale(c), std::abs(x1), std::abs(x2)});
}

inline double coord_tol(const Curve& c, Complex x, Tolerance tol = {}) {
    return tol.rel * coord_scale(c, x);
}

inline double residual_tol(const Curve& c, Complex x, Tolerance tol = {}) {
    double s = coord_scale(c, x);
    return tol.rel * s * s * s;
}

inline bool contains(const Curve& c, const Point& p, Tolerance tol = {}) {
    if (p.is_infinity())
        return true;
    return std::abs(p.y() * p.y() - c.rhs(p.x())) <= residual_tol(c, p.x(), tol);
}

inline Point negate(const Point& p) {
    if (p.is_infinity())
        return p;
    return Point::affine(p.x(), -p.y());
}

// y on the requested branch: branch * principal_sqrt(rhs(x)), branch in {+1, -1}.
inline Complex y_from_x(const Curve& c, Complex x, int branch = +1) {
    Complex w = principal_sqrt(c.rhs(x));
    return branch >= 0 ? w : -w;
}

inline Point point_from_x(const Curve& c, Complex x, int branch = +1) {
    return Point::affine(x, y_from_x(c, x, branch));
}

inline Point dbl(const Curve& c, const Point& p, Tolerance tol = {}) {
    if (p.is_infinity())
        return p;
    if (!contains(c, p, tol))
        throw OffCurve("dbl: point fails the curve equation");
    // vertical tangent: y = 0 means 2-torsion
    if (std::abs(p.y()) <= coord_tol(c, p.x(), tol))
        return Point::infinity();
    Complex lambda = c.rhs_prime(p.x()) / (2.0 * p.y());
    Complex x3 = lambda * lambda / 4.0 + c.root_sum() - 2.0 * p.x();
    Complex y3 = -(lambda * (x3 - p.x()) + p.y());
    return Point::affine(x3, y3);
}

inline Point add(const Curve& c, const Point& p, const Point& q, Tolerance tol = {}) {
    if (!contains(c, p, tol) || !contains(c, q, tol))
        throw OffCurve("add: point fails the curve equation");
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    double ctol = tol.rel * coord_scale(c, p.x(), q.x());
    if (std::abs(p.x() - q.x()) <= ctol) {
        // vertical chord first, so that 2-torsion doubled through add gives
        // infinity instead of a 0/0 slope
        if (std::abs(p.y() + q.y()) <= ctol)
            return Point::infinity();
        if (std::abs(p.y() - q.y()) <= ctol)
            return dbl(c, p, tol);
        throw OffCurve("add: points share x but y values are neither equal nor opposite");
    }
    Complex lambda = (q.y() - p.y()) / (q.x() - p.x());
    Complex x3 = lambda * lambda / 4.0 + c.root_sum() - p.x() - q.x();
    Complex y3 = -(lambda * (x3 - p.x()) + p.y());
    return Point::affine(x3, y3);
}

// Double-and-add; k may be negative (multiplies the negated point).
inline Point multiply(const Curve& c, std::int64_t k, const Point& p, Tolerance tol = {}) {
    if (!contains(c, p, tol))
        throw OffCurve("multiply: point fails the curve equation");
    Point base = p;
    if (k < 0) {
        base = negate(base);
        k = -k;
    }
    Point acc = Point::infinity();
    while (k > 0) {
        if (k & 1)
            acc = add(c, acc, base, tol);
        k >>= 1;
        if (k > 0)
            base = dbl(c, base, tol);
    }
    return acc;
}

// Smallest n <= max_order with n*p = infinity, computed by repeated addition
// so every intermediate multiple passes through the annihilation test.
// Returns nullopt when no multiple vanishes; a non-torsion point whose
// multiples outgrow double range also reports nullopt rather than an error
// (only the input point itself is held to the on-curve precondition).
inline std::optional<int> order_of(const Curve& c, const Point& p, int max_order = 16,
                                   Tolerance tol = {}) {
    if (max_order < 1)
        throw Error("order_of: max_order must be at least 1");
    if (!contains(c, p, tol))
        throw OffCurve("order_of: point fails the curve equation");
    Point acc = p;
    for (int n = 1; n <= max_order; ++n) {
        if (acc.is_infinity())
            return n;
        if (n == max_order)
            break;
        if (!contains(c, acc, tol))
            return std::nullopt; // multiples escaped the representable scale
        acc = add(c, acc, p, tol);
    }
    return std::nullopt;
}

} // namespace ec8
