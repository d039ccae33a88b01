#pragma once

#include <stdexcept>
#include <string>

namespace schnyder {

enum class ErrorCode {
    BadParams,
    NonSimple,
    EulerViolation,
    RootsNotOnOuterFace,
    RootsNotClockwise,
    NotThreeConnected,
    InvalidWood,
    CyclicConstraint,
    UnknownVertex,
    InconsistentInputs,
    HNotConnected,
    CycleInHZero,
    NoWitness,
    NotATree,
    CapExceeded,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace schnyder
