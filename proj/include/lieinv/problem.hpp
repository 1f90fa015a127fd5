#pragma once

// Problem files: an algebra, an optional representation, and pipeline
// options, read from JSON (see docs/problem.schema.json).

#include "lieinv/invariants.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace lieinv {

inline constexpr int kProblemSchema = 1;

struct Problem {
    std::string name;
    LieAlgebra algebra;
    std::optional<Representation> representation;
    std::optional<ParamCovector> covector;
    PolarizationHints hints;
    std::optional<std::uint64_t> seed;
    VerifyOptions verify;
};

/// Parses a problem. Malformed JSON raises Error{Parse} with line and
/// column; structural problems raise Error{Validation} naming the field.
Problem parse_problem(std::string_view text, const std::string& fallback_name = "problem");
Problem load_problem(const std::filesystem::path& path);

/// Jacobi identity and the homomorphism property of the representation.
ValidationReport validate_problem(const Problem& problem);

}  // namespace lieinv
