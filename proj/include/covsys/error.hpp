#pragma once

#include <stdexcept>
#include <string>

namespace covsys {

enum class ErrorCode {
    InvalidModulus,
    InvalidArgument,
    EmptySystem,
    Overflow,
    ScanLimitExceeded,
    NotADivisor,
    NotVanishing,
    TooManyPrimeFactors,
    ZeroVector,
    NegativeCoefficient,
    TargetNotPresent,
    CosetNotPresent,
    NotExact,
    AlreadyTrivial,
    NoEligibleMaximalModulus,
    WrongPrimeSupport,
    EnumerationLimitExceeded,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception type. `code` identifies the contract violation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace covsys
