#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cipherbench {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke a width/range precondition of a primitive.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Key material is malformed (wrong length, failed parity check, ...).
class InvalidKeyError : public Error {
public:
    using Error::Error;
};

// Textual input could not be parsed. `position` is a character offset for
// hex strings and a 1-based line number for line-oriented formats.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

// PKCS#7 pad is absent or inconsistent.
class PaddingError : public Error {
public:
    using Error::Error;
};

// Structurally valid input that violates a semantic rule (lengths, ids, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A factor is not defined for the requested parameter.
class UndefinedFactorError : public Error {
public:
    using Error::Error;
};

}  // namespace cipherbench
