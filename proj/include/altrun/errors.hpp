#pragma once

#include <stdexcept>
#include <string>

namespace altrun {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division left a nonzero remainder where exactness was required.
struct NonExactDivision : Error {
    using Error::Error;
};

// Homogenization degree is smaller than the polynomial degree.
struct DegreeExceedsHomogenization : Error {
    using Error::Error;
};

// Series division by a series whose constant term is not a unit.
struct NonUnitDenominator : Error {
    using Error::Error;
};

// Series composition with an inner series of nonzero constant term.
struct NonzeroInnerConstant : Error {
    using Error::Error;
};

// Arithmetic between truncated series of different orders.
struct OrderMismatch : Error {
    using Error::Error;
};

// A quantity asserted to be an integer came out fractional.
struct IntegralityViolation : Error {
    using Error::Error;
};

// Request beyond a configured brute-force or truncation bound.
struct BoundExceeded : Error {
    using Error::Error;
};

// Index outside the validity range of a family, formula, or identity.
struct UnsupportedIndex : Error {
    using Error::Error;
};

// Statistic not applicable to the given word kind.
struct KindMismatch : Error {
    using Error::Error;
};

}  // namespace altrun
