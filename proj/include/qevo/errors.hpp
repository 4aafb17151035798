#pragma once

#include <stdexcept>
#include <string>

namespace qevo {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidWireError : public Error {
public:
    using Error::Error;
};

class QubitLimitError : public Error {
public:
    using Error::Error;
};

class NotNormalizedError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class NotDensityMatrixError : public Error {
public:
    using Error::Error;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

class UnevaluatedError : public Error {
public:
    using Error::Error;
};

class TooShortError : public Error {
public:
    using Error::Error;
};

class GenerationStalledError : public Error {
public:
    using Error::Error;
};

class InvalidDiversityError : public Error {
public:
    using Error::Error;
};

class EvalFailedError : public Error {
public:
    EvalFailedError(const std::string& msg, std::size_t index)
        : Error(msg), candidate_index(index) {}
    std::size_t candidate_index;
};

class EmptyStudyError : public Error {
public:
    using Error::Error;
};

/// File or stream level problem (missing file, write failure, ...).
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input; carries a 1-based line number when one is known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    long line_number;
};

/// Structurally valid input whose content fails a consistency check.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg, std::string id = "")
        : Error(id.empty() ? msg : msg + " (record " + id + ")"),
          record_id(std::move(id)) {}
    std::string record_id;
};

class UnknownKeyError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

}  // namespace qevo
