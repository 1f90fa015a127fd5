#pragma once

// Elimination of canonical variables, the Casimir and representation
// invariant pipelines, and functional independence.

#include "lieinv/darboux.hpp"

#include <optional>

namespace lieinv {

enum class InvariantStatus { Complete, Partial, Implicit };
const char* to_string(InvariantStatus status);

struct InvariantSet {
    std::vector<std::string> coords;
    ExprVector invariants;
    /// Expressions that must be positive for the invariants to be defined.
    ExprVector chart;
    std::vector<Verdict> verdicts;
    InvariantStatus status = InvariantStatus::Complete;
    /// Remaining equations (expression = 0) when elimination stopped early.
    ExprVector implicit;
    /// Everything available for manual combination when selection is partial.
    ExprVector candidates;
    std::string diagnostic;
};

/// Solves f_i(q, p, j) = coords_i for the parameters j by triangular
/// back-substitution (linear steps and exp inversion), then checks the round
/// trip j(f(q, p, j)) = j. On failure the status is Implicit and the
/// unsolved equations are returned.
InvariantSet eliminate(const TransitionSet& ts, const std::vector<std::string>& coords);

struct PipelineOptions {
    std::uint64_t seed = 20240917;
    std::optional<ParamCovector> covector;
    PolarizationHints hints;
    VerifyOptions verify;
};

/// Coadjoint invariants in coordinates X1..Xn. Errors carry the stage name.
InvariantSet casimirs(const LieAlgebra& algebra, const PipelineOptions& options = {});

/// Invariants of the representation in coordinates x1..xN, selected from the
/// Casimirs of the extended algebra that depend on x only. When fewer than
/// invariant_count(rep) are direct, Laurent monomials of degree at most 2 in
/// the Casimirs are searched for combinations free of the base coordinates.
InvariantSet rep_invariants(const LieAlgebra& algebra, const Representation& rep, const PipelineOptions& options = {});

enum class Independence { Independent, Dependent, Inconclusive };
const char* to_string(Independence verdict);

struct IndependenceReport {
    Independence verdict = Independence::Inconclusive;
    std::size_t rank = 0;
    int points_used = 0;
};

/// Numeric Jacobian rank at seeded chart points (relative singular value
/// tolerance 1e-9). Independent when some point reaches full row rank.
IndependenceReport functional_independence(const ExprVector& functions, const std::vector<std::string>& coords,
                                           std::uint64_t seed, int points = 5);

/// True when `candidate` is functionally dependent on `basis`: the stacked
/// Jacobian never exceeds the rank of the basis Jacobian at the probe points.
bool functionally_dependent(const ExprVector& basis, const Expr& candidate, const std::vector<std::string>& coords,
                            std::uint64_t seed, int points = 5);

}  // namespace lieinv
