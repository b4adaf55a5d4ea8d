#pragma once

#include <stdexcept>
#include <string>

namespace thetasphere {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed or inconsistent manifold specification
struct SpecError : Error {
    using Error::Error;
};

// an operation precondition was violated (reported, not asserted)
struct PreconditionError : Error {
    using Error::Error;
};

// rewriting exceeded the iteration cap; results are inconclusive
struct ReductionLimitError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

} // namespace thetasphere
