#include "lieinv/probe.hpp"

#include "lieinv/detail/expr_node.hpp"
#include "lieinv/errors.hpp"

#include <cmath>
#include <random>

namespace lieinv {

RationalPoint rational_point(const std::vector<std::string>& names, std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1)));
    std::uniform_int_distribution<int> grid(200, 999);
    RationalPoint p;
    for (const auto& n : names) {
        Rational q(grid(rng), 400);
        q.canonicalize();
        p[n] = q;
    }
    return p;
}

NumericPoint probe_point(const std::vector<std::string>& names, std::uint64_t seed, int index) {
    NumericPoint p;
    for (const auto& [n, q] : rational_point(names, seed, index)) p[n] = q.get_d();
    return p;
}

Bindings to_bindings(const RationalPoint& p) {
    Bindings b;
    for (const auto& [n, q] : p) b[n] = Expr(q);
    return b;
}

ZeroTest test_zero(const Expr& e, const ProbeOptions& opts) {
    if (e.is_zero()) return {ZeroVerdict::Zero, false};
    if (!e.is_transcendental()) return {ZeroVerdict::NonZero, false};
    const auto& num = e.node().num;
    int evaluated = 0;
    for (int i = 0; i < opts.points * 4 && evaluated < opts.points; ++i) {
        const auto pt = probe_point(e.free_symbols(), opts.seed, i);
        double scale = 0;
        double value = 0;
        try {
            value = detail::eval_poly(num, pt, &scale);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::Domain) continue;
            throw;
        }
        if (!std::isfinite(value)) continue;
        ++evaluated;
        if (std::fabs(value) > opts.tolerance * std::max(1.0, scale)) return {ZeroVerdict::NonZero, true};
    }
    if (evaluated == 0) return {ZeroVerdict::NonZero, true};
    return {ZeroVerdict::ProbablyZero, true};
}

bool certainly_nonzero(const Expr& e, const std::string& what, const ProbeOptions& opts) {
    const ZeroTest t = test_zero(e, opts);
    if (t.verdict == ZeroVerdict::ProbablyZero)
        throw Error(ErrorKind::Decidability, "cannot decide whether " + what + " = " + e.to_string() + " is zero");
    return t.verdict == ZeroVerdict::NonZero;
}

}  // namespace lieinv
