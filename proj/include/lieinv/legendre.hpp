#pragma once

// Conjugate-representation invariants from non-degenerate invariants of a
// representation, through the Legendre transform.

#include "lieinv/invariants.hpp"

namespace lieinv {

/// Sheaf coefficients are plain symbols alpha1, alpha2, ...
inline constexpr const char* kSheafPrefix = "alpha";

struct InvariantSheaf {
    ExprVector members;
    std::vector<std::string> params;

    /// sum_k params[k] * members[k]
    Expr combined() const;
};

InvariantSheaf make_sheaf(const ExprVector& invariants);

struct HessianReport {
    bool nondegenerate = false;
    Expr determinant;
};

/// Determinant of the Hessian of `f` in `coords`, possibly an expression in
/// sheaf parameters. Nondegenerate when it is not identically zero.
HessianReport hessian_nondegenerate(const Expr& f, const std::vector<std::string>& coords);

struct LegendreTransform {
    Expr value;
    /// The inverse gradient map: each old coordinate in the new ones.
    Bindings inverse;
    ExprVector chart;
};

/// value(to) = sum_a from_a * to_a - f(from) at to_a = df/dfrom_a. The
/// gradient map is inverted with the triangular solver of `eliminate`;
/// failure raises Error{GradientInversion} listing the unsolved equations.
LegendreTransform legendre_transform(const Expr& f, const std::vector<std::string>& from,
                                     const std::vector<std::string>& to);

/// Transforms twice and compares with `f` by normal form.
bool legendre_involution(const Expr& f, const std::vector<std::string>& from, const std::vector<std::string>& to);

/// Splits a transformed sheaf into invariants: coefficients of the
/// parameter monomials when the denominator only involves parameters,
/// otherwise specializations at small integer parameter values. Constant
/// factors are dropped, dependent members removed, and every survivor is
/// checked against `fields`.
InvariantSet extract_conjugate_basis(const Expr& transformed, const std::vector<std::string>& params,
                                     const std::vector<std::string>& coords, const std::vector<VectorField>& fields,
                                     std::uint64_t seed, const VerifyOptions& verify = {});

struct ConjugateResult {
    InvariantSet invariants;
    InvariantSheaf sheaf;
    Expr determinant;
    Expr transform;
    bool involution = false;
};

/// rep_invariants, sheaf, Hessian, transform, extraction. The result lives in
/// coordinates X1..XN of the conjugate space. Errors carry the stage name.
ConjugateResult conjugate_invariants(const LieAlgebra& algebra, const Representation& rep,
                                     const PipelineOptions& options = {});

}  // namespace lieinv
