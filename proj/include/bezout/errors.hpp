#pragma once

#include <stdexcept>
#include <string>

namespace bezout {

// Base for every domain error raised by the toolkit. `code()` is a stable,
// machine-readable identifier used in JSON reports.
class BezoutError : public std::runtime_error {
public:
    BezoutError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define BEZOUT_DEFINE_ERROR(Name, Code)                                        \
    class Name : public BezoutError {                                          \
    public:                                                                    \
        explicit Name(const std::string& what) : BezoutError(Code, what) {}    \
    }

BEZOUT_DEFINE_ERROR(ParseError, "ParseError");
BEZOUT_DEFINE_ERROR(ZeroMass, "ZeroMass");
BEZOUT_DEFINE_ERROR(DegenerateChoice, "DegenerateChoice");
BEZOUT_DEFINE_ERROR(OrderViolation, "OrderViolation");
BEZOUT_DEFINE_ERROR(CoincidenceCase, "CoincidenceCase");
BEZOUT_DEFINE_ERROR(InternalConsistency, "InternalConsistency");
BEZOUT_DEFINE_ERROR(BoundaryZero, "BoundaryZero");
BEZOUT_DEFINE_ERROR(NonIntegerWinding, "NonIntegerWinding");
BEZOUT_DEFINE_ERROR(ClusterUnresolved, "ClusterUnresolved");
BEZOUT_DEFINE_ERROR(EvaluationOverflow, "EvaluationOverflow");

#undef BEZOUT_DEFINE_ERROR

} // namespace bezout
