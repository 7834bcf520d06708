#pragma once

// Umbrella header: complex group law on y^2 = 4(x-e1)(x-e2)(x-e3), nested
// radicals for the explicit order-8 point, and the division-polynomial
// torsion oracle.

#include "complex_ops.hpp"
#include "curve.hpp"
#include "division_poly.hpp"
#include "errors.hpp"
#include "radicals.hpp"
#include "torsion.hpp"
#include "weierstrass.hpp"
