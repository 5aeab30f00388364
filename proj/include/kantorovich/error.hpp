#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kantorovich {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteIntegrand : public Error {
public:
    NonFiniteIntegrand() : Error("non-finite integrand") {}
};

/// Raised when S_n needs a cell coefficient that was never computed.
class CoverageError : public Error {
public:
    CoverageError() : Error("grid outside cell cover") {}
};

class DegenerateTrial : public Error {
public:
    DegenerateTrial() : Error("degenerate trial") {}
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; `offset` is the byte position where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace kantorovich
