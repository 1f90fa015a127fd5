#include "structure.hpp"

#include "lieinv/errors.hpp"
#include "lieinv/matexp.hpp"

namespace lieinv {

Subspace annihilator(const LieAlgebra& algebra, const ParamCovector& lambda) {
    return make_subspace(algebra.dim(), nullspace(algebra.commutator_matrix(lambda.entries)));
}

std::vector<Subspace> derived_series(const LieAlgebra& algebra) {
    std::vector<Subspace> series{whole_space(algebra.dim())};
    for (;;) {
        const Subspace& last = series.back();
        std::vector<ExprVector> brackets;
        for (std::size_t a = 0; a < last.dim(); ++a)
            for (std::size_t b = a + 1; b < last.dim(); ++b) {
                ExprVector v = algebra.bracket(last.basis[a], last.basis[b]);
                if (!is_zero(v)) brackets.push_back(std::move(v));
            }
        Subspace next = make_subspace(algebra.dim(), brackets);
        if (next.dim() == last.dim()) return series;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) return series;
    }
}

bool is_solvable(const LieAlgebra& algebra) { return derived_series(algebra).back().dim() == 0; }

Subspace center(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    ExprMatrix stacked(n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const ExprMatrix ad = algebra.ad(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = ad(i, j);
    }
    return make_subspace(n, nullspace(stacked));
}

Subspace radical(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    std::vector<ExprVector> brackets;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) brackets.push_back(algebra.bracket(a, b));
    const Subspace derived = make_subspace(n, brackets);
    if (derived.dim() == 0) return whole_space(n);
    const ExprMatrix killing = algebra.killing_form();
    std::vector<ExprVector> rows;
    for (const auto& y : derived.basis) rows.push_back(killing * y);
    return make_subspace(n, nullspace(ExprMatrix::from_rows(rows)));
}

namespace {

// Largest subspace of span(cols) that every matrix maps into itself.
std::vector<ExprVector> invariant_part(const std::vector<ExprMatrix>& ops, std::vector<ExprVector> cols) {
    while (!cols.empty()) {
        const ExprMatrix w = ExprMatrix::from_columns(cols);
        const auto left = nullspace(w.transpose());
        if (left.empty()) return cols;
        const ExprMatrix annihilate = ExprMatrix::from_rows(left);
        std::vector<ExprVector> rows;
        for (const auto& op : ops) {
            const ExprMatrix image = annihilate * (op * w);
            for (std::size_t r = 0; r < image.rows(); ++r) rows.push_back(image.row(r));
        }
        const auto keep = nullspace(ExprMatrix::from_rows(rows));
        if (keep.size() == cols.size()) return cols;
        std::vector<ExprVector> next;
        for (const auto& c : keep) next.push_back(w * c);
        cols = std::move(next);
    }
    return cols;
}

// A common eigenvector of the matrices, in reduced echelon form. Throws
// Error{UnsupportedField} when the rational eigenvalues are exhausted.
ExprVector common_eigenvector(const std::vector<ExprMatrix>& ops, std::size_t d) {
    std::vector<ExprVector> space;
    for (std::size_t i = 0; i < d; ++i) space.push_back(unit_vector(d, i));
    for (const auto& op : ops) {
        const ExprMatrix u = ExprMatrix::from_columns(space);
        const std::size_t m = space.size();
        ExprMatrix restricted(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            auto c = solve(u, op * space[j]);
            if (!c) throw Error(ErrorKind::Construction, "invariant subspace lost during eigenvector search");
            for (std::size_t i = 0; i < m; ++i) restricted(i, j) = (*c)[i];
        }
        if (restricted.is_zero()) continue;
        std::string remainder;
        const auto spectrum = field_eigenvalues(restricted, remainder);
        bool found = false;
        for (const auto& ev : spectrum) {
            std::vector<ExprVector> kernel;
            for (const auto& c : nullspace(restricted - ev.value * ExprMatrix::identity(m))) kernel.push_back(u * c);
            auto inv = invariant_part(ops, kernel);
            if (!inv.empty()) {
                space = std::move(inv);
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::UnsupportedField,
                        "no rational common eigenvector; unsplit characteristic factor " +
                            (remainder.empty() ? std::string("(none)") : remainder));
    }
    return row_basis(space).front();
}

}  // namespace

IdealChain ideal_chain(const LieAlgebra& algebra) {
    const auto series = derived_series(algebra);
    if (series.back().dim() != 0) throw Error(ErrorKind::NotSolvable, "derived series does not reach zero");
    const std::size_t n = algebra.dim();
    IdealChain chain;
    Subspace current{n, {}};
    for (auto term = series.rbegin() + 1; term != series.rend(); ++term) {
        while (current.dim() < term->dim()) {
            const auto reps = structure::greedy_complement(current, term->basis);
            std::vector<ExprVector> basis = reps;
            basis.insert(basis.end(), current.basis.begin(), current.basis.end());
            const std::size_t d = reps.size();
            std::vector<ExprMatrix> ops;
            for (std::size_t k = 0; k < n; ++k) {
                const ExprMatrix ad = algebra.ad(k);
                ExprMatrix op(d, d);
                for (std::size_t j = 0; j < d; ++j) {
                    const auto c = structure::coordinates(basis, ad * reps[j]);
                    if (!c) throw Error(ErrorKind::Construction, "derived series term is not an ideal");
                    for (std::size_t i = 0; i < d; ++i) op(i, j) = (*c)[i];
                }
                ops.push_back(std::move(op));
            }
            const ExprVector v = structure::combine(reps, common_eigenvector(ops, d));
            std::vector<ExprVector> grown = current.basis;
            grown.push_back(v);
            current = make_subspace(n, grown);
            chain.ideals.push_back(current);
        }
    }
    return chain;
}

}  // namespace lieinv
