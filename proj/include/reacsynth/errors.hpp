#pragma once

#include <stdexcept>
#include <string>

namespace reacsynth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SortMismatch : Error {
    explicit SortMismatch(const std::string& what) : Error("sort mismatch: " + what) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

struct NonLinearError : Error {
    explicit NonLinearError(const std::string& what) : Error("non-linear term: " + what) {}
};

struct ModelDoesNotSatisfy : Error {
    explicit ModelDoesNotSatisfy(const std::string& what)
        : Error("model does not satisfy formula: " + what) {}
};

struct SolverError : Error {
    explicit SolverError(const std::string& what) : Error("solver: " + what) {}
};

struct EncodeError : Error {
    using Error::Error;
};

struct CertificationFailed : Error {
    explicit CertificationFailed(const std::string& what) : Error("certification failed: " + what) {}
};

struct NoCaseMatched : Error {
    explicit NoCaseMatched(const std::string& what) : Error("no controller case matched: " + what) {}
};

struct NoAdmissibleInput : Error {
    explicit NoAdmissibleInput(const std::string& what) : Error("no admissible input: " + what) {}
};

struct SpaceTooLarge : Error {
    explicit SpaceTooLarge(const std::string& what) : Error("state space too large: " + what) {}
};

} // namespace reacsynth
