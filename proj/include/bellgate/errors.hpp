#pragma once

#include <stdexcept>
#include <string>

namespace bellgate {

// Error taxonomy; the CLI maps these onto its exit-code protocol.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : Error {
    using Error::Error;
};
struct ModelInvalid : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct ScenarioMismatch : Error {
    using Error::Error;
};
struct NoViolation : Error {
    using Error::Error;
};
struct NotUniversal : Error {
    using Error::Error;
};
struct SolverFailure : Error {
    using Error::Error;
};
struct NotOnBoundary : Error {
    using Error::Error;
};
struct DegenerateFace : Error {
    using Error::Error;
};
struct EvalBudgetExceeded : Error {
    using Error::Error;
};

}  // namespace bellgate
