#pragma once

#include <stdexcept>
#include <string>

namespace jacbound {

// Every failure mode in the library maps to one of these codes so callers
// (and the CLI exit-code logic) can dispatch without string matching.
enum class ErrorCode {
    ParseError,
    DomainError,
    ParamError,
    DivisionByZero,
    DivisionByIntervalContainingZero,
    NegativeRadicand,
    NegativeBaseFractionalExponent,
    ZeroToNegativePower,
    PoleError,
    UnsupportedCase,
    UnsupportedField,
    DegenerateCase,
    NoSignChange,
    BudgetExceeded,
    NotFoundWithinCap,
    ShapeMismatch,
    NotPSD,
    PrecisionExhausted,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace jacbound
