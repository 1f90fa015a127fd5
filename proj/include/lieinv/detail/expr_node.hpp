#pragma once

// Internal representation of normalized expressions. Only library sources
// include this header.

#include "lieinv/expr.hpp"

#include <utility>
#include <vector>

namespace lieinv::detail {

enum class AtomKind : std::uint8_t { Symbol, Log };

struct AtomNode {
    AtomKind kind;
    std::string name;  // Symbol
    Expr arg;          // Log
};
using Atom = std::shared_ptr<const AtomNode>;

Atom make_symbol_atom(std::string name);
Atom make_log_atom(Expr arg);
int compare_atoms(const Atom& a, const Atom& b);
Expr atom_expr(const Atom& a);

struct Monomial {
    std::vector<std::pair<Atom, int>> powers;  // ascending atom order, exponents > 0
    Expr exp_arg;                              // zero means no exp factor

    bool is_one() const { return powers.empty() && exp_arg.is_zero(); }
};

/// Lexicographic order: a monomial holding a smaller atom with a higher
/// power ranks first; ties are broken by the exp argument.
int compare_monomials(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Terms sorted with the leading (greatest) monomial first, no zero
/// coefficients, no repeated monomials.
using Poly = std::vector<Term>;

Poly poly_constant(const Rational& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
void poly_canonicalize(Poly& p);  // sort and merge
bool poly_is_constant(const Poly& p);
bool poly_has_exp(const Poly& p);

struct ExprNode {
    Poly num;
    Poly den;
    std::vector<std::string> symbols;
    bool transcendental = false;
};

/// Builds the normal form of num/den.
Expr make_expr(Poly num, Poly den);
Expr poly_expr(Poly p);
Expr term_expr(const Term& t);
Expr monomial_expr(const Monomial& m);

/// Multivariate gcd over Q, exp factors treated as free variables; monic in the
/// monomial order.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Exact quotient; the caller guarantees divisibility.
Poly poly_exact_div(const Poly& a, const Poly& b);

double eval_atom(const Atom& a, const NumericPoint& point);
/// Value of p at point; *scale receives the sum of absolute term values.
double eval_poly(const Poly& p, const NumericPoint& point, double* scale);

}  // namespace lieinv::detail
