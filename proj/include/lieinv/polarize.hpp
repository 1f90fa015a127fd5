#pragma once

// Annihilators, ideal flags and polarizations for a covector lambda.

#include "lieinv/algebra.hpp"

#include <optional>

namespace lieinv {

/// A subspace of an n-dimensional algebra, held by a row basis in reduced
/// echelon form over the expression field.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<ExprVector> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const ExprVector& v) const;
};

Subspace make_subspace(std::size_t ambient, const std::vector<ExprVector>& vectors);
Subspace whole_space(std::size_t n);
/// Span of a + b.
Subspace sum(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);

/// Entries linear in the parameters with rational coefficients.
struct ParamCovector {
    ExprVector entries;
    std::vector<std::string> params;
};

/// Every entry has degree at most one in the parameters.
bool is_affine_in_params(const ParamCovector& lambda);

/// ideals[i] has dimension i + 1 and is an ideal of the whole algebra.
struct IdealChain {
    std::vector<Subspace> ideals;
};

/// First k vectors span the polarization; the rest are original basis vectors
/// completing it.
struct AdaptedBasis {
    std::vector<ExprVector> polarization;
    std::vector<std::size_t> complement;  // 0-based original indices
    /// Row I holds l_I in original coordinates.
    ExprMatrix rows() const;
};

struct PolarizationHints {
    std::optional<Subspace> cartan;
    std::optional<Subspace> radical;
};

struct PolarizationReport {
    bool isotropic = false;
    bool subalgebra = false;
    bool dimension = false;
    std::size_t expected_dim = 0;
    bool ok() const { return isotropic && subalgebra && dimension; }
};

Subspace annihilator(const LieAlgebra& algebra, const ParamCovector& lambda);

/// Derived series down to the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& algebra);
bool is_solvable(const LieAlgebra& algebra);
Subspace center(const LieAlgebra& algebra);
/// Kernel of X -> Killing(X, [g, g]).
Subspace radical(const LieAlgebra& algebra);

/// Full flag of ideals refining the derived series. Throws Error{NotSolvable}
/// or Error{UnsupportedField} when a quotient has no rational common
/// eigenvector.
IdealChain ideal_chain(const LieAlgebra& algebra);

PolarizationReport check_polarization(const LieAlgebra& algebra, const ParamCovector& lambda, const Subspace& p);

/// Sum of the kernels of B_lambda on a flag of ideals. When the flag does not
/// exist over the rationals, falls back to reduction along abelian ideals.
Subspace polarization_solvable(const LieAlgebra& algebra, const ParamCovector& lambda);
/// Cartan subalgebra plus positive root spaces; the center is added.
Subspace polarization_semisimple(const LieAlgebra& algebra, const ParamCovector& lambda, const Subspace& cartan);
/// Dispatch on the algebra type; mixed algebras split along the radical.
Subspace polarization(const LieAlgebra& algebra, const ParamCovector& lambda, const PolarizationHints& hints = {});

/// Greedy completion by original basis vectors in index order.
AdaptedBasis complete_basis(const LieAlgebra& algebra, const Subspace& p);

/// Nondegenerate covector linear in ind(g) parameters named j1, j2, ...
ParamCovector parametrize_covector(const LieAlgebra& algebra, std::uint64_t seed);
/// rank C(lambda) is maximal and the annihilator minor on the parameter
/// positions has nonzero determinant.
bool covector_certificate(const LieAlgebra& algebra, const ParamCovector& lambda, std::uint64_t seed);

}  // namespace lieinv
