#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hstar {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text could not be parsed; `position` is the byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands live in different rings") {}
    using Error::Error;
};

/// Exponent arithmetic would overflow the machine-width exponent type.
struct ExponentOverflow : Error {
    ExponentOverflow() : Error("monomial exponent overflow") {}
};

/// Hadamard product of two points where every coordinate product vanishes.
struct AllZeroProduct : Error {
    AllZeroProduct() : Error("hadamard product undefined: all coordinate products vanish") {}
};

/// An operation required a point with no zero coordinate.
struct ZeroCoordinate : Error {
    ZeroCoordinate() : Error("point has a zero coordinate") {}
    using Error::Error;
};

/// A step-budgeted computation ran out of budget. Never a wrong answer.
struct BudgetExceeded : Error {
    std::uint64_t spent;
    explicit BudgetExceeded(std::uint64_t s)
        : Error("step budget exceeded after " + std::to_string(s) + " steps"), spent(s) {}
};

/// Monomial enumeration guard tripped (binomial search on large rings).
struct MonomialCountExceeded : Error {
    using Error::Error;
};

struct NotZeroDimensional : Error {
    NotZeroDimensional() : Error("system is not zero-dimensional") {}
    using Error::Error;
};

struct EmptyVariety : Error {
    EmptyVariety() : Error("ideal is the unit ideal; variety is empty") {}
};

struct WitnessNotFound : Error {
    using Error::Error;
};

struct NotStronglyConcise : Error {
    using Error::Error;
};

/// Zero-coordinate reduction needs rational witnesses; only algebraic ones exist.
struct IrrationalWitnessesOnly : Error {
    IrrationalWitnessesOnly()
        : Error("reduction requires rational witness points; only algebraic witnesses were found") {}
};

struct NotACurveParam : Error {
    using Error::Error;
};

struct AllSamplesDegenerate : Error {
    AllSamplesDegenerate()
        : Error("all sampled parameter points were degenerate; enlarge the height bound") {}
};

/// Certified root isolation failed (pathological input or precision escalation cap).
struct IsolationFailure : Error {
    using Error::Error;
};

/// Mixing algebraic numbers from incompatible extensions.
struct FieldMismatch : Error {
    FieldMismatch() : Error("algebraic numbers do not share a primitive element") {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace hstar
