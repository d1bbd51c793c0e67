#ifndef GBPA_ERRORS_HPP
#define GBPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbpa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error {
    using Error::Error;
};

struct UnknownNameError : Error {
    using Error::Error;
};

struct CyclicGammaError : Error {
    using Error::Error;
};

struct InvalidRelationError : Error {
    using Error::Error;
};

struct NotFiniteDimensionalError : Error {
    using Error::Error;
};

struct AlgebraMismatchError : Error {
    using Error::Error;
};

struct RelationViolationError : Error {
    using Error::Error;
};

struct ActionIncompatibleError : Error {
    using Error::Error;
};

// Parse diagnostics carry a 1-based source position.
struct SyntaxError : Error {
    int line;
    int col;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

} // namespace gbpa

#endif
