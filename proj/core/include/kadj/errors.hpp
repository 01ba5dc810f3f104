#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every kadj module.
 *
 * Every failure mode has its own type so callers (the CLI in particular) can
 * map mathematical failures, input errors and internal inconsistencies onto
 * distinct exit codes.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kadj {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- arithmetic ------------------------------------------------------------

/// A series with non-invertible constant term was inverted.
class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

// ---- linear algebra --------------------------------------------------------

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Elimination found nonzero candidates in a column but none of them is a unit.
class NoUnitPivot : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

// ---- determinant / adjoint pipeline ----------------------------------------

/// The Hankel matrix of the projected Krylov sequence is singular.
class SingularHankel : public Error {
public:
    using Error::Error;
};

/// Every randomized retry produced a singular Hankel matrix.
class DegenerateMinimalPolynomial : public SingularHankel {
public:
    using SingularHankel::SingularHankel;
};

/// H_A is not invertible (field mode with det A = 0).
class NonInvertibleHA : public Error {
public:
    using Error::Error;
};

/// A reverse-pass stage read a series slot that had been partially evaluated.
class WatermarkViolation : public Error {
public:
    using Error::Error;
};

/// A(0) is singular, so A(z) has no power series inverse.
class SingularLeadingMatrix : public Error {
public:
    using Error::Error;
};

// ---- input -----------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

}  // namespace kadj
