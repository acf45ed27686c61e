#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace znorm {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sample with zero observations was supplied.
class EmptySample : public Error {
public:
    EmptySample() : Error("sample is empty") {}
};

/// A sample contains NaN or infinite values.
class NonFiniteInput : public Error {
public:
    using Error::Error;
};

/// All observations are equal (zero variance), or a correlation
/// denominator vanished; the requested statistic is undefined.
class DegenerateSample : public Error {
public:
    using Error::Error;
};

/// A sample correlation coefficient reached exactly +1 or -1, so the
/// Fisher z-transform is infinite. `direction` carries the sign of r.
class PerfectCorrelation : public Error {
public:
    explicit PerfectCorrelation(int direction)
        : Error(direction > 0 ? "correlation is exactly +1" : "correlation is exactly -1"),
          direction(direction) {}
    int direction;
};

/// Argument outside the mathematical domain of the function.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// A population-level formula was requested for a distribution whose
/// moments of the required order do not exist.
class MomentOrderTooLow : public Error {
public:
    using Error::Error;
};

/// Sample size below the minimum required by the formula.
class InvalidN : public Error {
public:
    using Error::Error;
};

/// Malformed or out-of-range distribution specification.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Significance level outside (0, 1).
class InvalidAlpha : public Error {
public:
    using Error::Error;
};

/// Too few null replications to estimate the requested quantile.
class Underpowered : public Error {
public:
    using Error::Error;
};

/// Input file could not be opened.
class FileNotFound : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed; `line` is 1-based (0 if unknown).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0) : Error(what), line(line) {}
    std::size_t line;
};

}  // namespace znorm
