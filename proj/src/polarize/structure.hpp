#pragma once

// Coordinates in a basis, subalgebra and quotient structure constants.

#include "lieinv/polarize.hpp"

namespace lieinv::structure {

/// Coefficients c with sum c_i basis[i] = v, or nullopt when v is outside the
/// span.
std::optional<ExprVector> coordinates(const std::vector<ExprVector>& basis, const ExprVector& v);
ExprVector combine(const std::vector<ExprVector>& basis, const ExprVector& coeffs);

/// Structure constants in the given basis of a subalgebra. Throws
/// Error{Construction} when the span is not closed.
LieAlgebra restrict_to(const LieAlgebra& algebra, const std::vector<ExprVector>& basis);

struct Quotient {
    LieAlgebra algebra;
    std::vector<ExprVector> complement;  // representatives of the quotient basis
};

/// algebra / ideal, with representatives chosen greedily from the unit
/// vectors.
Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal);

/// Candidates, in order, that extend a basis of `part`.
std::vector<ExprVector> greedy_complement(const Subspace& part, const std::vector<ExprVector>& candidates);
std::vector<ExprVector> unit_vectors(std::size_t n);

Subspace ideal_generated(const LieAlgebra& algebra, const std::vector<ExprVector>& vectors);
bool is_abelian_span(const LieAlgebra& algebra, const std::vector<ExprVector>& vectors);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);

/// lambda restricted to the given basis.
ParamCovector restrict_covector(const ParamCovector& lambda, const std::vector<ExprVector>& basis);
/// Map a subspace given in coordinates of `basis` back to the ambient space.
Subspace pull_back(std::size_t ambient, const std::vector<ExprVector>& basis, const Subspace& s);

}  // namespace lieinv::structure
