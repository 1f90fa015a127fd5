#pragma once

// Spectral tools for square expression matrices whose eigenvalues lie in the
// expression field: characteristic polynomial, eigenvalues, Jordan-Chevalley
// splitting and exp(u*A).

#include "lieinv/matrix.hpp"

namespace lieinv {

/// Coefficients c[0..n] of det(t*I - A), c[n] = 1.
ExprVector characteristic_polynomial(const ExprMatrix& a);

struct Eigenvalue {
    Expr value;
    int multiplicity;
};

/// All eigenvalues with algebraic multiplicity. Rational roots are found for
/// constant characteristic polynomials; otherwise diagonal entries are tried.
/// Throws Error{UnsupportedField} naming the irreducible remainder.
std::vector<Eigenvalue> eigenvalues(const ExprMatrix& a, const ProbeOptions& opts = {});
/// Same search without throwing; `remainder` receives the characteristic
/// polynomial factor left unsplit, or stays empty when everything split.
std::vector<Eigenvalue> field_eigenvalues(const ExprMatrix& a, std::string& remainder, const ProbeOptions& opts = {});

struct JordanChevalley {
    ExprMatrix semisimple;
    ExprMatrix nilpotent;
    std::vector<Eigenvalue> spectrum;
};

JordanChevalley jordan_chevalley(const ExprMatrix& a, const ProbeOptions& opts = {});

/// exp(u*A) as an exact matrix of exponential-polynomial entries.
ExprMatrix exp_matrix(const ExprMatrix& a, const Expr& u, const ProbeOptions& opts = {});

}  // namespace lieinv
