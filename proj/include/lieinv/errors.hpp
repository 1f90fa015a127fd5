#pragma once

#include <stdexcept>
#include <string>

namespace lieinv {

enum class ErrorKind {
    Resource,
    Domain,
    UnboundVariable,
    DivisionByZero,
    Decidability,
    DimensionMismatch,
    Validation,
    NotSolvable,
    UnsupportedField,
    PolarizationNotFound,
    DegenerateCovector,
    ParametrizationExhausted,
    Construction,
    EliminationFailed,
    GradientInversion,
    DegenerateInvariant,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::string stage = {})
        : std::runtime_error(what), kind_(kind), stage_(std::move(stage)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& stage() const noexcept { return stage_; }

    /// Copy of this error tagged with the pipeline stage it surfaced in.
    /// An already attributed error keeps its innermost stage.
    Error with_stage(const std::string& stage) const {
        return Error(kind_, what(), stage_.empty() ? stage : stage_);
    }

private:
    ErrorKind kind_;
    std::string stage_;
};

}  // namespace lieinv
