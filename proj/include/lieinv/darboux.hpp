#pragma once

// Left-invariant fields in second-kind coordinates and the linear transition
// to canonical coordinates on a nondegenerate coadjoint orbit.

#include "lieinv/polarize.hpp"

namespace lieinv {

struct TransitionSet {
    std::size_t dim = 0;
    ExprVector functions;        // f_i(q, p, j) in the original basis
    std::vector<std::string> q;  // q{m+1}..q{n}, indexed by adapted basis position
    std::vector<std::string> p;
    std::vector<std::string> params;
    AdaptedBasis basis;
    ParamCovector covector;
};

/// sum over a of df/dq_a dg/dp_a - df/dp_a dg/dq_a.
Expr canonical_bracket(const Expr& f, const Expr& g, const std::vector<std::string>& q,
                       const std::vector<std::string>& p);

/// Coordinates h1..hm on the polarization and q{m+1}..q{n} on the complement
/// for g = exp(q l_{m+1})...exp(q l_n) exp(h1 l_1)...exp(hm l_m).
std::vector<std::string> second_kind_coordinates(const AdaptedBasis& basis);

/// Left-invariant fields of the original basis vectors in second-kind
/// coordinates; [xi_i, xi_j] = C_ij^k xi_k. Throws Error{UnsupportedField}
/// when an exponential leaves the rationals.
std::vector<VectorField> left_invariant_fields(const LieAlgebra& algebra, const AdaptedBasis& basis);

/// Functions affine in p with {f_i, f_j} = C_ij^k f_k and f(0, 0) = lambda.
/// Throws Error{Construction} if the bracket identity fails.
TransitionSet transition_functions(const LieAlgebra& algebra, const AdaptedBasis& basis, const ParamCovector& lambda);

/// Descriptions of every failed check: bracket pairs, base point, p-rank.
std::vector<std::string> transition_violations(const LieAlgebra& algebra, const TransitionSet& ts);

}  // namespace lieinv
