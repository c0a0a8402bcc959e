#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient was requested (or supplied) at or beyond the guaranteed precision.
class OutOfWindowError : public Error {
public:
    using Error::Error;
};

// Division by a series whose lowest coefficient is not +1 or -1.
class NonUnitError : public Error {
public:
    using Error::Error;
};

// A comparison or evaluation needs more exact coefficients than are available.
class InsufficientPrecisionError : public Error {
public:
    using Error::Error;
};

// A Pochhammer factor with generator +1 (the product is identically zero).
class ZeroProductError : public Error {
public:
    using Error::Error;
};

// A monomial specialization that does not give a formal series.
class UnsupportedSpecializationError : public Error {
public:
    using Error::Error;
};

// Bad argument to a series operation (m = 0 substitution, r outside [0, m), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace qseries
