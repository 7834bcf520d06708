#pragma once

#include <stdexcept>

namespace ec8 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two curve roots coincide: the cubic 4(x-e1)(x-e2)(x-e3) is singular and
// the group law is undefined.
struct DegenerateCurve : Error {
    using Error::Error;
};

// A point handed to the group law does not satisfy the curve equation
// within tolerance.
struct OffCurve : Error {
    using Error::Error;
};

// beta landed in {0, 1, -1}: the order-8 construction divides by beta,
// beta - 1 and beta + 1, so the invariants do not exist there.
struct InvalidBeta : Error {
    using Error::Error;
};

// Division-polynomial index outside the supported range.
struct UnsupportedIndex : Error {
    using Error::Error;
};

} // namespace ec8
