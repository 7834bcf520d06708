#pragma once

// Division polynomials psi_n for Y^2 = X^3 + A X + B, evaluated pointwise at
// a given (X, Y).  psi_n vanishes exactly at the points of order dividing n,
// so the first vanishing index is the order of the point — an arithmetic
// certificate independent of the chord-tangent group law.
//
// Even-index psi carry a 2Y factor.  The table stores t_n with that factor
// taken out (psi_n = t_n for n odd, psi_n = 2Y t_n for n even), which turns
// the usual psi_{2m} recurrence into a division-free one:
//
//     t_{2m+1} = w^2 t_{m+2} t_m^3 - t_{m-1} t_{m+1}^3        (m even)
//     t_{2m+1} = t_{m+2} t_m^3 - w^2 t_{m-1} t_{m+1}^3        (m odd)
//     t_{2m}   = t_m (t_{m+2} t_{m-1}^2 - t_{m-2} t_{m+1}^2)
//
// with w = (2Y)^2.  In particular 2-torsion input (Y = 0) never divides
// by zero.

#include <array>
#include <cmath>
#include <vector>

#include "weierstrass.hpp"

namespace ec8 {

inline constexpr int kMaxPsiIndex = 16;

struct PsiValue {
    int n = 0;
    Complex value;
};

// psi_1 .. psi_max_index at one point.  scale[n] is a running first-order
// sensitivity for psi_n: the magnitude whose epsilon-fraction bounds the
// noise the computed value can carry, accumulated operation by operation
// through the recurrence with the inputs floored at their data scale.
// "psi_n vanishes" therefore means |psi_n| <= rel * scale[n].  A shared
// scale cannot work — psi_16 can reach 1e40 while psi_2 sits near 2 — and
// neither can the bare |psi_n|, because a vanished factor forwards 100%
// relative noise to every later entry it enters (t_16 has t_8 as an explicit
// factor, so at an 8-torsion point the computed psi_16 is noise times a
// large bracket, with no cancellation at step 16 itself).
struct PsiTable {
    std::array<Complex, kMaxPsiIndex + 1> value{};
    std::array<double, kMaxPsiIndex + 1> scale{};
    int max_index = 0;

    PsiValue at(int n) const {
        if (n < 1 || n > max_index)
            throw UnsupportedIndex("psi index outside the computed table");
        return {n, value[static_cast<size_t>(n)]};
    }
};

inline PsiTable psi_table(const ShortWeierstrass& sw, Complex X, Complex Y,
                          int max_index = kMaxPsiIndex, Tolerance tol = {}) {
    if (max_index < 1 || max_index > kMaxPsiIndex)
        throw UnsupportedIndex("psi_table: supported indices are 1..16");
    if (!contains(sw, Point::affine(X, Y), tol))
        throw OffCurve("psi_table: (X, Y) fails Y^2 = X^3 + A X + B");

    // Every quantity travels with a running sensitivity: the magnitude whose
    // epsilon-fraction bounds its roundoff.  Multiplies propagate it through
    // the product rule plus the product's own rounding; subtractions add the
    // larger operand, which is exactly the noise left behind when the
    // difference cancels.  Inputs are seeded at the curve's data scale, so a
    // coefficient that is morally zero but stored as an epsilon-sized double
    // still counts as uncertain at full size.
    struct Val {
        Complex v;
        double s = 0.0;
    };
    auto mul = [](const Val& a, const Val& b) -> Val {
        double am = std::abs(a.v), bm = std::abs(b.v);
        return {a.v * b.v, a.s * bm + am * b.s + am * bm};
    };
    auto sub = [](const Val& a, const Val& b) -> Val {
        return {a.v - b.v, a.s + b.s + std::max(std::abs(a.v), std::abs(b.v))};
    };
    auto acc = [](const Val& a, const Val& b) -> Val {
        return {a.v + b.v, a.s + b.s + std::max(std::abs(a.v), std::abs(b.v))};
    };
    auto sq = [&mul](const Val& a) { return mul(a, a); };
    auto cube = [&mul](const Val& a) { return mul(mul(a, a), a); };
    auto scaled = [](double c, const Val& a) -> Val { return {c * a.v, c * a.s}; };

    const double S = coord_scale(sw, X);
    const Val vX{X, S};
    const Val vA{sw.A, S * S};
    const Val vB{sw.B, S * S * S};
    const Val vY2{2.0 * Y, 2.0 * std::max(std::abs(Y), S * std::sqrt(S))};
    const Val vw2 = sq(sq(vY2)); // w^2 = (2Y)^4

    const Val X2 = sq(vX), X3 = mul(X2, vX);
    std::array<Val, kMaxPsiIndex + 1> t{};
    t[0] = {Complex(0.0), 0.0};
    t[1] = {Complex(1.0), 0.0};
    t[2] = {Complex(1.0), 0.0};
    if (max_index >= 3)
        t[3] = sub(acc(acc(scaled(3.0, mul(X2, X2)), scaled(6.0, mul(vA, X2))),
                       scaled(12.0, mul(vB, vX))),
                   sq(vA));
    if (max_index >= 4)
        t[4] = scaled(2.0, sub(acc(acc(mul(X3, X3), scaled(5.0, mul(vA, mul(X2, X2)))),
                                   scaled(20.0, mul(vB, X3))),
                               acc(acc(acc(scaled(5.0, mul(sq(vA), X2)),
                                           scaled(4.0, mul(mul(vA, vB), vX))),
                                       scaled(8.0, sq(vB))),
                                   cube(vA))));
    for (int k = 5; k <= max_index; ++k) {
        if (k & 1) {
            int m = (k - 1) / 2; // k = 2m+1, needs t up to m+2 = (k+3)/2 < k
            Val lead = mul(t[m + 2], cube(t[m]));
            Val tail = mul(t[m - 1], cube(t[m + 1]));
            t[k] = (m % 2 == 0) ? sub(mul(vw2, lead), tail) : sub(lead, mul(vw2, tail));
        } else {
            int m = k / 2;
            t[k] = mul(t[m], sub(mul(t[m + 2], sq(t[m - 1])), mul(t[m - 2], sq(t[m + 1]))));
        }
    }

    PsiTable table;
    table.max_index = max_index;
    for (int n = 1; n <= max_index; ++n) {
        size_t nu = static_cast<size_t>(n);
        Val p = (n & 1) ? t[nu] : mul(vY2, t[nu]);
        table.value[nu] = p.v;
        table.scale[nu] = p.s;
    }
    return table;
}

inline Complex psi(int n, const ShortWeierstrass& sw, Complex X, Complex Y, Tolerance tol = {}) {
    if (n < 1 || n > kMaxPsiIndex)
        throw UnsupportedIndex("psi: supported indices are 1..16");
    return psi_table(sw, X, Y, n, tol).value[static_cast<size_t>(n)];
}

struct PsiProfileEntry {
    int n = 0;
    bool vanishes = false;
};

// Vanishing profile over n = 2..16, each entry judged against the largest
// intermediate magnitude met up to its own index.  A non-finite entry never
// counts as vanishing.
inline std::vector<PsiProfileEntry> torsion_profile(const ShortWeierstrass& sw, const Point& p,
                                                    Tolerance tol = {}) {
    if (p.is_infinity())
        throw OffCurve("torsion_profile: point at infinity has no profile");
    PsiTable table = psi_table(sw, p.x(), p.y(), kMaxPsiIndex, tol);
    std::vector<PsiProfileEntry> out;
    out.reserve(kMaxPsiIndex - 1);
    for (int n = 2; n <= kMaxPsiIndex; ++n) {
        size_t nu = static_cast<size_t>(n);
        double a = std::abs(table.value[nu]);
        bool judged = std::isfinite(a) && std::isfinite(table.scale[nu]);
        out.push_back({n, judged && a <= tol.rel * table.scale[nu]});
    }
    return out;
}

// First vanishing index of the profile: the certified order of an affine
// point (points of order dividing n are exactly the zeros of psi_n, so the
// minimal vanishing n is the order itself).  nullopt if nothing vanishes
// through psi_16.
inline std::optional<int> oracle_order(const ShortWeierstrass& sw, const Point& p,
                                       Tolerance tol = {}) {
    for (const PsiProfileEntry& e : torsion_profile(sw, p, tol))
        if (e.vanishes)
            return e.n;
    return std::nullopt;
}

// Order exactly 8: psi_8 vanishes, psi_4 does not, and the point is not
// 2-torsion.  The point at infinity (order 1) reports false.
inline bool is_order_exactly_8(const ShortWeierstrass& sw, const Point& p, Tolerance tol = {}) {
    if (p.is_infinity())
        return false;
    PsiTable table = psi_table(sw, p.x(), p.y(), 8, tol);
    double a8 = std::abs(table.value[8]);
    return std::isfinite(a8) && std::isfinite(table.scale[8])
        && a8 <= tol.rel * table.scale[8]
        && std::abs(table.value[4]) > tol.rel * table.scale[4]
        && std::abs(p.y()) > tol.rel * coord_scale(sw, p.x());
}

} // namespace ec8
