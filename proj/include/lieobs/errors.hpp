#ifndef LIEOBS_ERRORS_HPP
#define LIEOBS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieobs {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or schema violation (CLI exit code 3).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Mathematically invalid user input: broken Jacobi, non-derivation
/// representative, mismatched bases and so on (CLI exit code 1).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A mathematical invariant the theory guarantees failed to hold.
/// Always indicates a bug, never bad input (CLI exit code 2).
class InternalCheckError : public Error {
public:
    explicit InternalCheckError(const std::string& msg) : Error(msg) {}
};

} // namespace lieobs

#endif
