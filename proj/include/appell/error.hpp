#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace appell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when an exhaustive enumeration would exceed the configured cap.
class CombinatorialBlowUp : public Error {
public:
    CombinatorialBlowUp(std::size_t n, std::size_t cap)
        : Error("combinatorial blow-up: n = " + std::to_string(n) +
                " exceeds the enumeration cap " + std::to_string(cap)),
          n_(n), cap_(cap) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("series is not invertible: zero constant term") {}
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    NormalizationError() : Error("normalization violated: d_0 must be 1") {}
};

/// Two routes that must agree produced different values.
class VerificationMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace appell
