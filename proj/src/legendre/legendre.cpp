#include "lieinv/legendre.hpp"

#include "lieinv/errors.hpp"

#include "../invariants/combine.hpp"

#include <algorithm>

namespace lieinv {

namespace {

constexpr int kMaxSheafDegree = 8;

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw e.with_stage(stage);
    }
}

bool certainly_nonzero(const Expr& e) {
    return !e.is_zero() && test_zero(e).verdict == ZeroVerdict::NonZero;
}

// Taylor coefficients at the origin of the parameters, in graded order of
// the last parameter within the earlier ones. False when not polynomial.
bool parameter_coefficients(const Expr& e, const std::vector<std::string>& params, std::size_t i, ExprVector& out) {
    if (i == params.size()) {
        if (!e.is_zero()) out.push_back(e);
        return true;
    }
    const Bindings at_zero{{params[i], Expr()}};
    Expr d = e;
    Rational factorial = 1;
    for (int k = 0; !d.is_zero(); ++k) {
        if (k > kMaxSheafDegree) return false;
        if (k > 0) factorial *= k;
        if (!parameter_coefficients(substitute(d, at_zero) / Expr(factorial), params, i + 1, out)) return false;
        d = differentiate(d, params[i]);
    }
    return true;
}

ExprVector specializations(const Expr& e, const std::vector<std::string>& params) {
    ExprVector out;
    for (std::size_t t = 0; t <= params.size(); ++t) {
        Bindings values;
        for (std::size_t k = 0; k < params.size(); ++k) values[params[k]] = Expr(static_cast<long>(1 + (k + t) % (params.size() + 1)));
        try {
            out.push_back(substitute(e, values));
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::DivisionByZero && err.kind() != ErrorKind::Domain) throw;
        }
    }
    return out;
}

bool only_involves(const Expr& e, const std::vector<std::string>& names) {
    const auto& symbols = e.free_symbols();
    return std::all_of(symbols.begin(), symbols.end(), [&](const std::string& s) {
        return std::find(names.begin(), names.end(), s) != names.end();
    });
}

}  // namespace

Expr InvariantSheaf::combined() const {
    Expr sum;
    for (std::size_t k = 0; k < members.size(); ++k) sum += Expr::symbol(params[k]) * members[k];
    return sum;
}

InvariantSheaf make_sheaf(const ExprVector& invariants) {
    InvariantSheaf sheaf{invariants, coordinate_names(kSheafPrefix, invariants.size())};
    return sheaf;
}

HessianReport hessian_nondegenerate(const Expr& f, const std::vector<std::string>& coords) {
    const std::size_t n = coords.size();
    ExprMatrix h(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const Expr da = differentiate(f, coords[a]);
        for (std::size_t b = a; b < n; ++b) h(a, b) = h(b, a) = differentiate(da, coords[b]);
    }
    HessianReport report;
    report.determinant = det(h);
    report.nondegenerate = certainly_nonzero(report.determinant);
    return report;
}

LegendreTransform legendre_transform(const Expr& f, const std::vector<std::string>& from,
                                     const std::vector<std::string>& to) {
    if (from.size() != to.size()) throw Error(ErrorKind::DimensionMismatch, "coordinate lists differ in length");
    TransitionSet gradient;
    gradient.dim = from.size();
    gradient.params = from;
    for (const auto& x : from) gradient.functions.push_back(differentiate(f, x));

    const InvariantSet solved = eliminate(gradient, to);
    auto failure = [&](const std::string& why) {
        std::string what = "gradient map not inverted: " + why;
        for (const auto& eq : solved.implicit) what += "; " + eq.to_string() + " = 0";
        return Error(ErrorKind::GradientInversion, what);
    };
    if (solved.status != InvariantStatus::Complete || solved.invariants.size() != from.size())
        throw failure(solved.diagnostic.empty() ? "no triangular solution" : solved.diagnostic);

    LegendreTransform out;
    for (std::size_t a = 0; a < from.size(); ++a) out.inverse[from[a]] = solved.invariants[a];
    // The solver may have fixed a power of a coordinate instead of itself.
    for (std::size_t a = 0; a < from.size(); ++a)
        if (certainly_nonzero(substitute(gradient.functions[a], out.inverse) - Expr::symbol(to[a])))
            throw failure("solution does not reproduce " + to[a]);

    Expr pairing;
    for (std::size_t a = 0; a < from.size(); ++a) pairing += Expr::symbol(from[a]) * Expr::symbol(to[a]);
    out.value = substitute(pairing - f, out.inverse);
    out.chart = solved.chart;
    return out;
}

bool legendre_involution(const Expr& f, const std::vector<std::string>& from, const std::vector<std::string>& to) {
    const auto forward = legendre_transform(f, from, to);
    const auto back = legendre_transform(forward.value, to, from);
    return test_zero(back.value - f).verdict == ZeroVerdict::Zero;
}

InvariantSet extract_conjugate_basis(const Expr& transformed, const std::vector<std::string>& params,
                                     const std::vector<std::string>& coords, const std::vector<VectorField>& fields,
                                     std::uint64_t seed, const VerifyOptions& verify) {
    ExprVector pieces;
    if (!only_involves(transformed.denominator(), params) ||
        !parameter_coefficients(transformed.numerator(), params, 0, pieces)) {
        pieces = specializations(transformed, params);
    }
    InvariantSet out;
    out.coords = coords;
    out.candidates = pieces;
    ExprVector kept;
    for (const auto& piece : pieces)
        if (!piece.is_constant()) kept.push_back(detail::tidy(piece));
    // Shorter pieces first, so a bare coefficient wins over its square.
    std::stable_sort(kept.begin(), kept.end(), [](const Expr& a, const Expr& b) {
        return std::pair(a.term_count(), a.to_string().size()) < std::pair(b.term_count(), b.to_string().size());
    });
    const auto independent = detail::independent_subset(kept, coords, seed);
    if (independent.size() < kept.size())
        out.diagnostic = "dropped " + std::to_string(kept.size() - independent.size()) + " dependent pieces";
    for (const auto& j : independent) {
        Verdict v = verify_invariant(fields, j, verify);
        if (v.kind == VerdictKind::Refuted)
            throw Error(ErrorKind::Construction, "conjugate invariant " + j.to_string() + " is refuted");
        out.invariants.push_back(j);
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

ConjugateResult conjugate_invariants(const LieAlgebra& algebra, const Representation& rep,
                                     const PipelineOptions& options) {
    const auto x = coordinate_names("x", rep.dim());
    const auto X = coordinate_names("X", rep.dim());
    const InvariantSet base = rep_invariants(algebra, rep, options);

    ConjugateResult out;
    out.sheaf = make_sheaf(base.invariants);
    const Expr combined = out.sheaf.combined();
    const HessianReport hessian = staged("hessian", [&] {
        auto report = hessian_nondegenerate(combined, x);
        if (!report.nondegenerate)
            throw Error(ErrorKind::DegenerateInvariant,
                        "the invariant sheaf has a degenerate Hessian; run rep-invariants on the dual representation instead");
        return report;
    });
    out.determinant = hessian.determinant;
    const LegendreTransform transform = staged("legendre", [&] { return legendre_transform(combined, x, X); });
    out.transform = transform.value;
    out.involution = staged("involution", [&] { return legendre_involution(combined, x, X); });
    out.invariants = staged("extract", [&] {
        return extract_conjugate_basis(transform.value, out.sheaf.params, X,
                                       generators(dual_representation(rep), X), options.seed, options.verify);
    });
    for (const auto& c : transform.chart)
        if (only_involves(c, X)) out.invariants.chart.push_back(c);
    if (base.status != InvariantStatus::Complete || !out.involution) {
        out.invariants.status = InvariantStatus::Partial;
        if (out.invariants.diagnostic.empty())
            out.invariants.diagnostic = out.involution ? "representation invariants are incomplete"
                                                       : "the double transform does not reproduce the sheaf";
    }
    return out;
}

}  // namespace lieinv
