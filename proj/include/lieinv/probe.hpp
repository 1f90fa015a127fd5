#pragma once

// Zero testing: exact normal form first, seeded numeric probing as fallback.

#include "lieinv/expr.hpp"

#include <cstdint>

namespace lieinv {

struct ProbeOptions {
    std::uint64_t seed = 20240917;
    int points = 8;
    double tolerance = 1e-10;
};

enum class ZeroVerdict {
    Zero,            // normal form is zero
    NonZero,         // certified: nonzero rational function, or a probe disagrees
    ProbablyZero,    // nonzero normal form, every probe vanishes
};

struct ZeroTest {
    ZeroVerdict verdict;
    bool probabilistic;  // verdict rests on numeric probes
};

using RationalPoint = std::map<std::string, Rational, std::less<>>;

/// Seeded point with coordinates in [0.5, 2.5) on the grid k/400, so exact
/// substitution and float evaluation agree.
RationalPoint rational_point(const std::vector<std::string>& names, std::uint64_t seed, int index);
NumericPoint probe_point(const std::vector<std::string>& names, std::uint64_t seed, int index);
Bindings to_bindings(const RationalPoint& p);

ZeroTest test_zero(const Expr& e, const ProbeOptions& opts = {});

/// True iff e is certainly nonzero; throws Error{Decidability} naming
/// `what` when the normal form is nonzero but every probe vanishes.
bool certainly_nonzero(const Expr& e, const std::string& what, const ProbeOptions& opts = {});

}  // namespace lieinv
