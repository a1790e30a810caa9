#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projkit {

enum class ErrorKind {
    DegreeMismatch,
    FieldMismatch,
    ArityMismatch,
    TwistMismatch,
    NotAntisymmetric,
    OddSize,
    DegreeInfeasible,
    RankPrereqViolated,
    InvalidParams,
    IndexOutOfRange,
    DegenerateW,
    CompositionNonzero,
    DegreeConstraintViolated,
    HomogeneityViolated,
    NoCompatibleRow,
    SingularSystem,
    IntegralityViolation,
    RankNotTwo,
    MalformedInput,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace projkit
