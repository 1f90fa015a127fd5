#pragma once

// Dense univariate polynomials with rational coefficients.

#include "lieinv/expr.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lieinv {

class UPoly {
public:
    UPoly() = default;
    /// coeffs[i] multiplies t^i.
    explicit UPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational evaluate(const Rational& t) const;
    UPoly monic() const;
    std::string to_string(const std::string& var = "t") const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
    void trim();
};

/// Quotient and remainder of a by nonzero b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

struct RootSplit {
    std::vector<std::pair<Rational, int>> roots;  // ascending, with multiplicity
    UPoly rest;                                   // no rational roots
};

/// Splits off every rational root of a nonzero polynomial.
RootSplit rational_roots(const UPoly& p);

}  // namespace lieinv
