#ifndef MFDFA_ERRORS_HPP
#define MFDFA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfdfa {

// Base of all library errors. The three branches map onto CLI exit codes:
// ConfigError -> 1 (usage), DataError -> 2 (bad input), NumericError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

// -- analysis ---------------------------------------------------------------

class NonFiniteSample : public DataError {
public:
    using DataError::DataError;
};

class DegenerateGrid : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ScaleTooLarge : public DataError {
public:
    using DataError::DataError;
};

class FitUnderdetermined : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Every segment variance is zero at some scale while q <= 0 needs a
// positive value to average; raised e.g. for constant input.
class AllZeroVariance : public NumericError {
public:
    using NumericError::NumericError;
};

class GridTooCoarse : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class MissingQ2 : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class DegenerateSpectrum : public NumericError {
public:
    using NumericError::NumericError;
};

// -- statistics / classification --------------------------------------------

class SingleClass : public DataError {
public:
    using DataError::DataError;
};

class DimensionMismatch : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class NonConvergence : public NumericError {
public:
    using NumericError::NumericError;
};

class KTooLarge : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ClassTooSmall : public DataError {
public:
    using DataError::DataError;
};

// -- synthesis ---------------------------------------------------------------

class EmbeddingFailure : public NumericError {
public:
    using NumericError::NumericError;
};

// -- ingest ------------------------------------------------------------------

class ParseError : public DataError {
public:
    ParseError(const std::string& what, std::size_t line)
        : DataError(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyFile : public DataError {
public:
    using DataError::DataError;
};

class MissingSet : public DataError {
public:
    using DataError::DataError;
};

} // namespace mfdfa

#endif // MFDFA_ERRORS_HPP
