#pragma once

#include <stdexcept>
#include <string>

namespace tetherplan {

// Base for all domain errors. `code()` is stable and machine-readable;
// the CLI maps it into the error JSON object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define TETHERPLAN_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

TETHERPLAN_ERROR(ParseError);
TETHERPLAN_ERROR(TetherTooShort);
TETHERPLAN_ERROR(NonMonotoneTime);
TETHERPLAN_ERROR(SpeedMismatch);
TETHERPLAN_ERROR(NonAlternating);
TETHERPLAN_ERROR(ChainMismatch);
TETHERPLAN_ERROR(VerticalPair);
TETHERPLAN_ERROR(SlopeOutOfRange);
TETHERPLAN_ERROR(InfeasibleSlope);
TETHERPLAN_ERROR(SpanMismatch);
TETHERPLAN_ERROR(InvalidConfig);
TETHERPLAN_ERROR(CapExceeded);
TETHERPLAN_ERROR(IrrationalBudget);
TETHERPLAN_ERROR(VerifyError);

#undef TETHERPLAN_ERROR

}  // namespace tetherplan
