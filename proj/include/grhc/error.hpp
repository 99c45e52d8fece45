#pragma once

#include <stdexcept>
#include <string>

namespace grhc {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map categories onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSubsetError : public Error {
public:
    using Error::Error;
};

class InvalidColoringError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class TruncationError : public FormatError {
public:
    using FormatError::FormatError;
};

class RangeError : public FormatError {
public:
    using FormatError::FormatError;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidPatternError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

class LiftUndefinedError : public Error {
public:
    using Error::Error;
};

class HypothesisError : public Error {
public:
    using Error::Error;
};

}  // namespace grhc
