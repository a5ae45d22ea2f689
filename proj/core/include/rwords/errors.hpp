#pragma once

#include <stdexcept>
#include <string>

namespace rwords {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational string could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Letter probabilities do not sum to 1 exactly.
class SumNotOneError : public Error {
public:
    using Error::Error;
};

/// A letter probability lies outside (0, 1].
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// The asymptotic mean/variance formulas need a strictly maximal p_1.
class DegenerateLeaderError : public Error {
public:
    using Error::Error;
};

/// The reduced limit requires k_1 * p_1 < 1.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// The requested method does not cover this model (e.g. reduced
/// quadrature on a homogeneous alphabet); use the Monte Carlo route.
class UnsupportedModelError : public Error {
public:
    using Error::Error;
};

} // namespace rwords
