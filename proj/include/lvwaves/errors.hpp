#pragma once

#include <stdexcept>
#include <string>

namespace lvwaves {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration, CSV or number text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The two nullclines c11 u + c12 v = sigma1 and c21 u + c22 v = sigma2 are parallel.
class SingularLinesError : public Error {
public:
    using Error::Error;
};

/// Operation requires strong or weak competition (or strong only) and the
/// parameters are in a different regime.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// An induced competition coefficient c[row][col] is not strictly positive.
/// Indices are 1-based, matching the c_ij naming.
class NonPositiveCoefficient : public Error {
public:
    NonPositiveCoefficient(int row, int col, double value)
        : Error("induced coefficient c" + std::to_string(row) + std::to_string(col) +
                " = " + std::to_string(value) + " is not positive"),
          row_(row), col_(col), value_(value) {}

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }
    double value() const noexcept { return value_; }

private:
    int row_;
    int col_;
    double value_;
};

class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// No positive exact wave exists for the requested ansatz parameters.
class Infeasible : public Error {
public:
    using Error::Error;
};

class CflViolation : public Error {
public:
    using Error::Error;
};

class NegativeDensity : public Error {
public:
    using Error::Error;
};

class BlowupDetected : public Error {
public:
    using Error::Error;
};

class LevelNotCrossed : public Error {
public:
    using Error::Error;
};

/// Sub- and supersolution (or an iterate) are not ordered pointwise.
class NotOrdered : public Error {
public:
    using Error::Error;
};

class MaxIterExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace lvwaves
