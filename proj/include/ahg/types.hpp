#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahg {

// Dense ids. Players of a game and vertices of a friendship graph share the
// same id space: 0..n-1.
using PlayerId = std::uint32_t;
using VertexId = PlayerId;

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed combinatorial input: self-loops, endpoints out of range,
// non-partitions, and similar structural defects.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

// A parameter is outside the domain a constructor is defined on
// (e.g. an even cycle parameter where an odd one is required).
class ParameterError : public Error {
public:
    using Error::Error;
};

// The request exceeds a deliberate size guard of an exact algorithm.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A document is syntactically well-formed but semantically invalid.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A document could not be read at all; carries position info in the message.
class ParseError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed. Always a bug; callers should not catch this.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ahg
