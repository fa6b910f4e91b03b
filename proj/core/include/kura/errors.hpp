#ifndef KURA_ERRORS_HPP
#define KURA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kura {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A hard resource limit was exceeded (e.g. too many lines in an arrangement).
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Ill-typed input: dimension mismatch, unbound identifier, malformed literal.
class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& what) : Error(what) {}
};

/// A stated hypothesis of an operation was violated (e.g. a non-convex seed
/// passed to a convex-only verification, an empty set where nonempty is required).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Malformed data handed to a checker (e.g. a certificate with a zero functional).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Script syntax error with source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace kura

#endif
