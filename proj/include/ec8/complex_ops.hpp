#pragma once

#include <cmath>
#include <complex>

namespace ec8 {

using Complex = std::complex<double>;

// Principal square root: branch cut along the negative real axis, values in
// the closed right half-plane.  Arguments on the cut map to the positive
// imaginary axis; an imaginary part of -0.0 is normalized to +0.0 first so
// the result cannot depend on the sign of zero.  The half-plane choice is
// enforced by negation rather than trusted to the library sqrt.
inline Complex principal_sqrt(Complex z) {
    if (z.imag() == 0.0)
        z.imag(0.0);
    Complex w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0))
        w = -w;
    return w;
}

} // namespace ec8
