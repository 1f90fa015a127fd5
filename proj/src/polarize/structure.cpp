#include "structure.hpp"

#include "lieinv/errors.hpp"

namespace lieinv {

bool Subspace::contains(const ExprVector& v) const { return in_span(basis, v); }

Subspace make_subspace(std::size_t ambient, const std::vector<ExprVector>& vectors) {
    if (vectors.empty()) return {ambient, {}};
    return {ambient, row_basis(vectors)};
}

Subspace whole_space(std::size_t n) { return {n, structure::unit_vectors(n)}; }

Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<ExprVector> all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    return make_subspace(a.ambient, all);
}

bool same_subspace(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.dim() == b.dim() && same_span(a.basis, b.basis);
}

namespace structure {

std::vector<ExprVector> unit_vectors(std::size_t n) {
    std::vector<ExprVector> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
    return out;
}

std::optional<ExprVector> coordinates(const std::vector<ExprVector>& basis, const ExprVector& v) {
    if (basis.empty()) {
        if (is_zero(v)) return ExprVector{};
        return std::nullopt;
    }
    return solve(ExprMatrix::from_columns(basis), v);
}

ExprVector combine(const std::vector<ExprVector>& basis, const ExprVector& coeffs) {
    ExprVector out(basis.empty() ? 0 : basis[0].size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) out = add(out, scale(coeffs[i], basis[i]));
    return out;
}

LieAlgebra restrict_to(const LieAlgebra& algebra, const std::vector<ExprVector>& basis) {
    const std::size_t m = basis.size();
    LieAlgebra sub(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const ExprVector br = algebra.bracket(basis[a], basis[b]);
            if (is_zero(br)) continue;
            auto c = coordinates(basis, br);
            if (!c) throw Error(ErrorKind::Construction, "span is not closed under the bracket");
            for (std::size_t k = 0; k < m; ++k)
                if (!(*c)[k].is_zero()) sub.set_constant(a, b, k, (*c)[k]);
        }
    return sub;
}

std::vector<ExprVector> greedy_complement(const Subspace& part, const std::vector<ExprVector>& candidates) {
    std::vector<ExprVector> span = part.basis;
    std::vector<ExprVector> out;
    for (const auto& v : candidates) {
        if (in_span(span, v)) continue;
        span.push_back(v);
        out.push_back(v);
    }
    return out;
}

Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal) {
    Quotient q;
    q.complement = greedy_complement(ideal, unit_vectors(algebra.dim()));
    std::vector<ExprVector> basis = q.complement;
    basis.insert(basis.end(), ideal.basis.begin(), ideal.basis.end());
    const std::size_t m = q.complement.size();
    q.algebra = LieAlgebra(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const ExprVector br = algebra.bracket(q.complement[a], q.complement[b]);
            if (is_zero(br)) continue;
            auto c = coordinates(basis, br);
            for (std::size_t k = 0; k < m; ++k)
                if (!(*c)[k].is_zero()) q.algebra.set_constant(a, b, k, (*c)[k]);
        }
    return q;
}

Subspace ideal_generated(const LieAlgebra& algebra, const std::vector<ExprVector>& vectors) {
    Subspace s = make_subspace(algebra.dim(), vectors);
    for (;;) {
        std::vector<ExprVector> grown = s.basis;
        for (std::size_t k = 0; k < algebra.dim(); ++k) {
            const ExprMatrix ad = algebra.ad(k);
            for (const auto& v : s.basis) {
                ExprVector w = ad * v;
                if (!is_zero(w) && !in_span(grown, w)) grown.push_back(w);
            }
        }
        if (grown.size() == s.dim()) return s;
        s = make_subspace(algebra.dim(), grown);
    }
}

bool is_abelian_span(const LieAlgebra& algebra, const std::vector<ExprVector>& vectors) {
    for (std::size_t a = 0; a < vectors.size(); ++a)
        for (std::size_t b = a + 1; b < vectors.size(); ++b)
            if (!is_zero(algebra.bracket(vectors[a], vectors[b]))) return false;
    return true;
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
    for (std::size_t k = 0; k < algebra.dim(); ++k) {
        const ExprMatrix ad = algebra.ad(k);
        for (const auto& v : s.basis)
            if (!s.contains(ad * v)) return false;
    }
    return true;
}

ParamCovector restrict_covector(const ParamCovector& lambda, const std::vector<ExprVector>& basis) {
    ParamCovector out{{}, lambda.params};
    for (const auto& v : basis) out.entries.push_back(dot(lambda.entries, v));
    return out;
}

Subspace pull_back(std::size_t ambient, const std::vector<ExprVector>& basis, const Subspace& s) {
    std::vector<ExprVector> out;
    for (const auto& c : s.basis) out.push_back(combine(basis, c));
    return make_subspace(ambient, out);
}

}  // namespace structure
}  // namespace lieinv
