#pragma once

// Selection helpers for representation invariants.

#include "lieinv/invariants.hpp"

namespace lieinv::detail {

/// Numeric Jacobian rank at a point; nullopt off the chart.
std::optional<std::size_t> jacobian_rank(const ExprVector& functions, const std::vector<std::string>& coords,
                                         const NumericPoint& point);

/// Rational combinations of Laurent monomials of degree at most 2 in the
/// invariants whose derivatives along `eliminate` vanish identically.
ExprVector x_only_combinations(const ExprVector& invariants, const std::vector<std::string>& eliminate,
                               const std::vector<std::string>& coords, std::uint64_t seed);

/// Greedy functionally independent subset, in order.
ExprVector independent_subset(const ExprVector& functions, const std::vector<std::string>& coords,
                              std::uint64_t seed);

/// Scales away the rational content of the numerator.
Expr tidy(const Expr& e);

}  // namespace lieinv::detail
