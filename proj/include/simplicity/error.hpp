#pragma once

#include <stdexcept>
#include <string>

namespace simplicity {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Word enumeration or explicit Hilbert-space dimension above the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Iterative solver (power iteration, Jacobi sweeps) did not reach tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// Parameters outside the range where the closed forms are representable in double.
struct RangeError : Error {
    using Error::Error;
};

// Structural precondition of a specialised estimator does not hold.
struct StructureError : Error {
    using Error::Error;
};

}  // namespace simplicity
