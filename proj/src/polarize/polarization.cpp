#include "structure.hpp"

#include "lieinv/errors.hpp"
#include "lieinv/matexp.hpp"

namespace lieinv {

PolarizationReport check_polarization(const LieAlgebra& algebra, const ParamCovector& lambda, const Subspace& p) {
    PolarizationReport report;
    const ExprMatrix form = algebra.commutator_matrix(lambda.entries);
    report.isotropic = true;
    for (std::size_t a = 0; a < p.dim() && report.isotropic; ++a) {
        const ExprVector fa = form.transpose() * p.basis[a];
        for (std::size_t b = a + 1; b < p.dim(); ++b)
            if (!dot(fa, p.basis[b]).is_zero()) {
                report.isotropic = false;
                break;
            }
    }
    report.subalgebra = true;
    for (std::size_t a = 0; a < p.dim() && report.subalgebra; ++a)
        for (std::size_t b = a + 1; b < p.dim(); ++b)
            if (!p.contains(algebra.bracket(p.basis[a], p.basis[b]))) {
                report.subalgebra = false;
                break;
            }
    const std::size_t twice = algebra.dim() + annihilator(algebra, lambda).dim();
    report.expected_dim = twice / 2;
    report.dimension = twice % 2 == 0 && p.dim() == report.expected_dim;
    return report;
}

namespace {

bool form_vanishes(const LieAlgebra& algebra, const ParamCovector& lambda) {
    return algebra.commutator_matrix(lambda.entries).is_zero();
}

Subspace chain_polarization(const LieAlgebra& algebra, const ParamCovector& lambda) {
    const ExprMatrix form = algebra.commutator_matrix(lambda.entries);
    Subspace p{algebra.dim(), {}};
    for (const auto& ideal : ideal_chain(algebra).ideals) {
        const ExprMatrix g = ExprMatrix::from_rows(ideal.basis);
        std::vector<ExprVector> kernel;
        for (const auto& c : nullspace(g * form * g.transpose())) kernel.push_back(g.transpose() * c);
        p = sum(p, make_subspace(algebra.dim(), kernel));
    }
    return p;
}

// Greedy maximal abelian ideal grown from the last nonzero derived term.
Subspace abelian_ideal(const LieAlgebra& algebra) {
    const auto series = derived_series(algebra);
    Subspace a = series.size() >= 2 ? series[series.size() - 2] : whole_space(algebra.dim());
    if (!structure::is_abelian_span(algebra, a.basis)) a = {algebra.dim(), {}};
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        const ExprVector e = unit_vector(algebra.dim(), i);
        if (a.contains(e)) continue;
        std::vector<ExprVector> grown = a.basis;
        grown.push_back(e);
        Subspace candidate = structure::ideal_generated(algebra, grown);
        if (structure::is_abelian_span(algebra, candidate.basis)) a = std::move(candidate);
    }
    return a;
}

// Induction along abelian ideals: either pass to the B-orthogonal of the
// ideal, which is a proper subalgebra, or divide by the part of the ideal in
// ker lambda.
Subspace reduce(const LieAlgebra& algebra, const ParamCovector& lambda) {
    const std::size_t n = algebra.dim();
    if (form_vanishes(algebra, lambda)) return whole_space(n);
    const Subspace a = abelian_ideal(algebra);
    const ExprMatrix form = algebra.commutator_matrix(lambda.entries);
    std::vector<ExprVector> rows;
    for (const auto& v : a.basis) rows.push_back(form * v);
    const Subspace orth = make_subspace(n, nullspace(ExprMatrix::from_rows(rows)));
    if (orth.dim() < n) {
        const LieAlgebra sub = structure::restrict_to(algebra, orth.basis);
        const Subspace inner = reduce(sub, structure::restrict_covector(lambda, orth.basis));
        return sum(structure::pull_back(n, orth.basis, inner), a);
    }
    std::vector<ExprVector> kernel;
    {
        const ExprMatrix g = ExprMatrix::from_rows(a.basis);
        const ExprVector values = g * lambda.entries;
        for (const auto& c : nullspace(ExprMatrix::from_rows({values}))) kernel.push_back(g.transpose() * c);
    }
    if (kernel.empty())
        throw Error(ErrorKind::PolarizationNotFound,
                    "no rational polarization: the abelian ideals reduce to a central line where lambda is nonzero");
    const Subspace k = make_subspace(n, kernel);
    const auto q = structure::quotient(algebra, k);
    const Subspace inner = reduce(q.algebra, structure::restrict_covector(lambda, q.complement));
    return sum(structure::pull_back(n, q.complement, inner), k);
}

}  // namespace

Subspace polarization_solvable(const LieAlgebra& algebra, const ParamCovector& lambda) {
    if (!is_solvable(algebra)) throw Error(ErrorKind::NotSolvable, "solvable polarization requested for a non-solvable algebra");
    Subspace p;
    try {
        p = chain_polarization(algebra, lambda);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedField) throw;
        p = reduce(algebra, lambda);
    }
    const auto report = check_polarization(algebra, lambda, p);
    if (!report.ok())
        throw Error(ErrorKind::PolarizationNotFound, "constructed subspace of dimension " + std::to_string(p.dim()) +
                                                         " is not a polarization (expected " +
                                                         std::to_string(report.expected_dim) + ")");
    return p;
}

Subspace polarization_semisimple(const LieAlgebra& algebra, const ParamCovector& lambda, const Subspace& cartan) {
    const std::size_t n = algebra.dim();
    const Subspace h = sum(cartan, center(algebra));
    if (!structure::is_abelian_span(algebra, h.basis))
        throw Error(ErrorKind::Validation, "cartan subalgebra is not abelian");

    // A regular element: its zero eigenspace must be exactly h.
    ExprMatrix ad;
    std::vector<Eigenvalue> spectrum;
    bool regular = false;
    for (int attempt = 0; attempt < 8 && !regular; ++attempt) {
        ExprVector element(n);
        for (std::size_t i = 0; i < h.dim(); ++i)
            element = add(element, scale(Expr(static_cast<long>(1 + i * (attempt + 2) + attempt)), h.basis[i]));
        ad = algebra.ad(element);
        spectrum = eigenvalues(ad);
        regular = nullspace(ad).size() == h.dim();
    }
    if (!regular) throw Error(ErrorKind::Construction, "no regular element found in the cartan subalgebra");

    struct RootSpace {
        std::vector<Rational> weight;  // values on the cartan basis
        std::vector<ExprVector> vectors;
    };
    std::vector<RootSpace> roots;
    std::size_t total = h.dim();
    for (const auto& ev : spectrum) {
        if (ev.value.is_zero()) continue;
        RootSpace r;
        r.vectors = nullspace(ad - ev.value * ExprMatrix::identity(n));
        total += r.vectors.size();
        const ExprVector& v = r.vectors.front();
        std::size_t pivot = 0;
        while (v[pivot].is_zero()) ++pivot;
        for (const auto& hb : h.basis) {
            const Expr value = algebra.bracket(hb, v)[pivot] / v[pivot];
            const auto q = value.as_rational();
            if (!q) throw Error(ErrorKind::UnsupportedField, "root value " + value.to_string() + " is not rational");
            r.weight.push_back(*q);
        }
        roots.push_back(std::move(r));
    }
    if (total != n) throw Error(ErrorKind::UnsupportedField, "ad of the cartan element is not diagonalizable over the rationals");

    auto positive = [](const std::vector<Rational>& w) {
        for (const auto& x : w)
            if (sgn(x) != 0) return sgn(x) > 0;
        return false;
    };
    std::vector<ExprVector> p = h.basis;
    for (const auto& r : roots) {
        for (const auto& v : r.vectors)
            if (!dot(lambda.entries, v).is_zero())
                throw Error(ErrorKind::DegenerateCovector, "covector does not vanish on a root space");
        if (!positive(r.weight)) continue;
        for (const auto& s : roots) {
            bool opposite = true;
            for (std::size_t i = 0; i < r.weight.size(); ++i) opposite = opposite && s.weight[i] == -r.weight[i];
            if (!opposite) continue;
            const Expr pairing = dot(lambda.entries, algebra.bracket(r.vectors.front(), s.vectors.front()));
            if (!certainly_nonzero(pairing, "covector on a coroot"))
                throw Error(ErrorKind::DegenerateCovector, "covector vanishes on a coroot");
        }
        p.insert(p.end(), r.vectors.begin(), r.vectors.end());
    }
    Subspace result = make_subspace(n, p);
    const auto report = check_polarization(algebra, lambda, result);
    if (!report.ok()) throw Error(ErrorKind::PolarizationNotFound, "positive Borel part is not a polarization");
    return result;
}

Subspace polarization(const LieAlgebra& algebra, const ParamCovector& lambda, const PolarizationHints& hints) {
    const std::size_t n = algebra.dim();
    Subspace p;
    if (algebra.is_abelian()) {
        p = whole_space(n);
    } else if (is_solvable(algebra)) {
        return polarization_solvable(algebra, lambda);
    } else {
        const Subspace r = hints.radical ? *hints.radical : radical(algebra);
        const Subspace z = center(algebra);
        if (same_subspace(r, z)) {
            if (!hints.cartan) throw Error(ErrorKind::PolarizationNotFound, "a cartan subalgebra hint is required");
            p = polarization_semisimple(algebra, lambda, *hints.cartan);
        } else {
            const ExprMatrix form = algebra.commutator_matrix(lambda.entries);
            std::vector<ExprVector> rows;
            for (const auto& v : r.basis) rows.push_back(form * v);
            const Subspace orth = make_subspace(n, nullspace(ExprMatrix::from_rows(rows)));
            if (orth.dim() == n)
                throw Error(ErrorKind::PolarizationNotFound, "covector pairs the radical trivially with the whole algebra");

            const Subspace pr = structure::pull_back(
                n, r.basis,
                polarization(structure::restrict_to(algebra, r.basis), structure::restrict_covector(lambda, r.basis)));

            PolarizationHints inner;
            if (hints.cartan) {
                std::vector<ExprVector> mapped;
                for (const auto& v : hints.cartan->basis) {
                    auto c = structure::coordinates(orth.basis, v);
                    if (!c) throw Error(ErrorKind::PolarizationNotFound, "cartan hint is not orthogonal to the radical");
                    mapped.push_back(*c);
                }
                inner.cartan = make_subspace(orth.dim(), mapped);
            }
            const Subspace po = structure::pull_back(
                n, orth.basis,
                polarization(structure::restrict_to(algebra, orth.basis),
                             structure::restrict_covector(lambda, orth.basis), inner));
            for (const auto& x : po.basis)
                for (const auto& y : pr.basis)
                    if (!pr.contains(algebra.bracket(x, y)))
                        throw Error(ErrorKind::PolarizationNotFound, "radical polarization is not stable under the orthogonal part");
            p = sum(po, pr);
        }
    }
    const auto report = check_polarization(algebra, lambda, p);
    if (!report.ok())
        throw Error(ErrorKind::PolarizationNotFound, "subspace of dimension " + std::to_string(p.dim()) +
                                                         " fails the polarization checks");
    return p;
}

ExprMatrix AdaptedBasis::rows() const {
    std::vector<ExprVector> all = polarization;
    const std::size_t n = polarization.empty() ? complement.size() : polarization[0].size();
    for (std::size_t i : complement) all.push_back(unit_vector(n, i));
    return ExprMatrix::from_rows(all);
}

AdaptedBasis complete_basis(const LieAlgebra& algebra, const Subspace& p) {
    AdaptedBasis out;
    out.polarization = p.basis;
    std::vector<ExprVector> span = p.basis;
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        const ExprVector e = unit_vector(algebra.dim(), i);
        if (in_span(span, e)) continue;
        span.push_back(e);
        out.complement.push_back(i);
    }
    return out;
}

}  // namespace lieinv
