#pragma once

#include <stdexcept>
#include <string>

namespace transversal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands declared over different rings.
struct RingMismatchError : Error {
    using Error::Error;
};

// Exponent-vector / ambient-rank length disagreement.
struct DimensionError : Error {
    using Error::Error;
};

// Graded computation requested on inhomogeneous data.
struct HomogeneityError : Error {
    using Error::Error;
};

// A graded piece is not finite-dimensional over the coefficient field.
struct InfiniteDimensionError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

// N is not contained in M where containment is required.
struct ContainmentError : Error {
    using Error::Error;
};

// Operation defined only for submodule presentations (empty relations).
struct RepresentationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int ln, int col)
        : Error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln),
          column(col)
    {
    }
};

}  // namespace transversal
