#pragma once

#include <stdexcept>
#include <string>

namespace mugen {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyClause : Error {
    EmptyClause() : Error("clause must contain at least one literal") {}
};

struct IncompleteAssignment : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(std::string msg, int line_number)
        : Error("line " + std::to_string(line_number) + ": " + std::move(msg)),
          line(line_number) {}
    int line;
};

struct HeaderMismatch : Error {
    using Error::Error;
};

struct TooManyVariables : Error {
    using Error::Error;
};

struct NotTwoSat : Error {
    using Error::Error;
};

struct NotSurjective : Error {
    using Error::Error;
};

struct WidthExceedsDonor : Error {
    using Error::Error;
};

struct BadIndex : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct SolverTimeout : Error {
    SolverTimeout() : Error("solver budget exceeded") {}
};

struct InputSatisfiable : Error {
    using Error::Error;
};

struct UnusedVariable : Error {
    using Error::Error;
};

} // namespace mugen
