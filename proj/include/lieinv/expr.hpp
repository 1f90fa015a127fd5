#pragma once

// Exact symbolic scalars over the rationals.
//
// An Expr is always held in normal form: a quotient num/den of two
// polynomials whose "variables" are atoms (named symbols and log(u) of a
// normalized u) and whose monomials may carry one exp(E) factor. The
// denominator is monic in the monomial order and shares no polynomial factor
// with the numerator when both are free of exp factors. Two Exprs that are
// structurally equal are semantically equal; the converse holds for pure
// rational functions, and numeric probing covers the transcendental rest.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieinv {

using Rational = mpq_class;

namespace detail {
struct ExprNode;
}

class Expr {
public:
    Expr();
    Expr(int value);  // NOLINT: implicit on purpose, integers are scalars
    Expr(long value);  // NOLINT
    Expr(const Rational& value);  // NOLINT

    static Expr symbol(std::string name);

    bool is_zero() const;
    bool is_one() const;
    bool is_constant() const;
    /// True when the denominator is a constant.
    bool is_polynomial() const;
    std::optional<Rational> as_rational() const;
    /// The bare symbol name when this expression is a single variable.
    std::optional<std::string> as_symbol() const;

    /// Sorted free symbol names, including those inside log and exp.
    const std::vector<std::string>& free_symbols() const;
    bool depends_on(std::string_view name) const;
    /// Contains a log atom or an exp factor.
    bool is_transcendental() const;

    Expr numerator() const;
    Expr denominator() const;
    std::size_t term_count() const;

    std::string to_string() const;

    /// Total structural order; consistent with operator==.
    static int compare(const Expr& a, const Expr& b);
    friend bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Expr& a, const Expr& b) { return compare(a, b) != 0; }
    friend bool operator<(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    Expr& operator+=(const Expr& b) { return *this = *this + b; }
    Expr& operator-=(const Expr& b) { return *this = *this - b; }
    Expr& operator*=(const Expr& b) { return *this = *this * b; }
    Expr& operator/=(const Expr& b) { return *this = *this / b; }

    const detail::ExprNode& node() const;
    explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<const detail::ExprNode> node_;  // null means zero
};

Expr pow(const Expr& base, int exponent);
Expr exp(const Expr& arg);
/// Formal logarithm on the chart where the argument is positive:
/// log(1) = 0, log(exp u) = u, and logs of monomials split into sums.
Expr log(const Expr& arg);

/// Drops exp factors and positive rational content from a single-term
/// quotient, leaving an expression with the same sign. Other inputs are
/// returned unchanged.
Expr sign_part(const Expr& e);

Expr differentiate(const Expr& e, std::string_view var);

using Bindings = std::map<std::string, Expr, std::less<>>;
/// Simultaneous substitution followed by normalization.
Expr substitute(const Expr& e, const Bindings& bindings);

using NumericPoint = std::map<std::string, double, std::less<>>;
/// Throws Error{Domain} for log of a non-positive value or a vanishing
/// denominator and Error{UnboundVariable} for a missing binding.
double eval_numeric(const Expr& e, const NumericPoint& point);

/// Infix text syntax: + - * / ^ (integer exponents), exp(), log(), ln(),
/// integer and decimal literals; p/q reads as an exact rational.
Expr parse_expr(std::string_view text);

/// Natural order on names: digit runs compare numerically, so q9 < q10.
int compare_names(std::string_view a, std::string_view b);

/// Upper bound on normal-form sizes; exceeding it raises Error{Resource}.
inline constexpr std::size_t kMaxTerms = 200000;

}  // namespace lieinv
