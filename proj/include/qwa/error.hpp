#pragma once

#include <stdexcept>
#include <string>

namespace qwa {

/// Mismatched moduli, dimensions or truncation orders.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An element that must be inverted is not a unit (e.g. [i] with p | i).
class UnitInversionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A product would exceed the configured total-degree cap.
class DegreeCapError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed input (non-prime p, bad JSON shape, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A verification routine found an identity that does not hold.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qwa
