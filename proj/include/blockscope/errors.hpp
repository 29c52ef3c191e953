#pragma once

#include <stdexcept>
#include <string>

namespace blockscope {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or JSON syntax.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A structurally well-formed table that violates a table invariant
// (orthogonality, power-map consistency, ...). Messages carry the
// offending class/character coordinates.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Misuse of an operation (bad prime, non-coprime Galois index, ...).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

} // namespace blockscope
