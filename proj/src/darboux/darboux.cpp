#include "lieinv/darboux.hpp"

#include "lieinv/errors.hpp"
#include "lieinv/matexp.hpp"

namespace lieinv {

Expr canonical_bracket(const Expr& f, const Expr& g, const std::vector<std::string>& q,
                       const std::vector<std::string>& p) {
    Expr out;
    for (std::size_t a = 0; a < q.size(); ++a)
        out += differentiate(f, q[a]) * differentiate(g, p[a]) - differentiate(f, p[a]) * differentiate(g, q[a]);
    return out;
}

std::vector<std::string> second_kind_coordinates(const AdaptedBasis& basis) {
    const std::size_t m = basis.polarization.size();
    std::vector<std::string> out = coordinate_names("h", m);
    for (std::size_t a = 0; a < basis.complement.size(); ++a) out.push_back("q" + std::to_string(m + a + 1));
    return out;
}

namespace {

// Columns hold the vectors in original coordinates.
ExprMatrix basis_columns(const AdaptedBasis& basis) { return basis.rows().transpose(); }

}  // namespace

std::vector<VectorField> left_invariant_fields(const LieAlgebra& algebra, const AdaptedBasis& basis) {
    const std::size_t n = algebra.dim();
    const std::size_t m = basis.polarization.size();
    const auto coords = second_kind_coordinates(basis);
    const ExprMatrix cols = basis_columns(basis);

    // Factors in product order: complement first, then the polarization.
    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < basis.complement.size(); ++a) order.push_back(m + a);
    for (std::size_t A = 0; A < m; ++A) order.push_back(A);

    // g^{-1} dg = sum_k Ad(exp(-u_n b_n) ... exp(-u_{k+1} b_{k+1})) b_k du_k.
    ExprMatrix maurer(n, n);
    ExprMatrix tail = ExprMatrix::identity(n);
    for (std::size_t pos = order.size(); pos-- > 0;) {
        const std::size_t k = order[pos];
        const ExprVector b = cols.column(k);
        const ExprVector image = tail * b;
        for (std::size_t i = 0; i < n; ++i) maurer(i, k) = image[i];
        tail = tail * exp_matrix(algebra.ad(b), -Expr::symbol(coords[k]));
    }
    const ExprMatrix inv = inverse(maurer);
    std::vector<VectorField> fields;
    for (std::size_t i = 0; i < n; ++i) fields.push_back({coords, inv.column(i)});
    return fields;
}

TransitionSet transition_functions(const LieAlgebra& algebra, const AdaptedBasis& basis, const ParamCovector& lambda) {
    const std::size_t n = algebra.dim();
    const std::size_t m = basis.polarization.size();
    const std::size_t k = basis.complement.size();
    TransitionSet ts;
    ts.dim = n;
    ts.basis = basis;
    ts.covector = lambda;
    ts.params = lambda.params;
    for (std::size_t a = 0; a < k; ++a) {
        ts.q.push_back("q" + std::to_string(m + a + 1));
        ts.p.push_back("p" + std::to_string(m + a + 1));
    }

    const ExprMatrix rows = basis.rows();
    const ExprMatrix to_adapted = inverse(rows.transpose());
    ExprVector values(n);
    for (std::size_t I = 0; I < n; ++I) values[I] = dot(lambda.entries, rows.row(I));

    // Prefix products of exp(q_a ad l_{m+a}); the complement vectors are
    // original basis vectors, so each exponent is a constant matrix.
    ExprMatrix prefix = ExprMatrix::identity(n);
    ExprMatrix r(n, k);
    for (std::size_t a = 0; a < k; ++a) {
        const ExprVector rho = to_adapted * prefix.column(basis.complement[a]);
        for (std::size_t I = 0; I < n; ++I) r(I, a) = rho[I];
        prefix = prefix * exp_matrix(algebra.ad(basis.complement[a]), Expr::symbol(ts.q[a]));
    }
    const ExprMatrix top = r.block(0, 0, m, k);
    const ExprMatrix bottom_inv = inverse(r.block(m, 0, k, k));

    for (std::size_t i = 0; i < n; ++i) {
        const ExprVector w = to_adapted * prefix.column(i);
        ExprVector lower(w.begin() + static_cast<std::ptrdiff_t>(m), w.end());
        const ExprVector xi = bottom_inv * lower;
        const ExprVector shift = top * xi;
        Expr f;
        for (std::size_t a = 0; a < k; ++a) f += xi[a] * (values[m + a] - Expr::symbol(ts.p[a]));
        for (std::size_t A = 0; A < m; ++A) f += (w[A] - shift[A]) * values[A];
        ts.functions.push_back(f);
    }

    const auto violations = transition_violations(algebra, ts);
    if (!violations.empty()) throw Error(ErrorKind::Construction, "transition functions fail: " + violations.front());
    return ts;
}

std::vector<std::string> transition_violations(const LieAlgebra& algebra, const TransitionSet& ts) {
    std::vector<std::string> out;
    const std::size_t n = ts.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Expr residual = canonical_bracket(ts.functions[i], ts.functions[j], ts.q, ts.p);
            for (std::size_t c = 0; c < n; ++c) residual -= algebra.constant(i, j, c) * ts.functions[c];
            if (!residual.is_zero())
                out.push_back("bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") off by " +
                              residual.to_string());
        }

    Bindings origin;
    for (const auto& v : ts.q) origin[v] = Expr();
    for (const auto& v : ts.p) origin[v] = Expr();
    for (std::size_t i = 0; i < n; ++i)
        if (substitute(ts.functions[i], origin) != ts.covector.entries[i])
            out.push_back("base point differs in component " + std::to_string(i + 1));

    ExprMatrix coeffs(n, ts.p.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < ts.p.size(); ++a) {
            coeffs(i, a) = differentiate(ts.functions[i], ts.p[a]);
            for (const auto& b : ts.p)
                if (!differentiate(coeffs(i, a), b).is_zero()) out.push_back("component " + std::to_string(i + 1) + " is not affine in p");
        }
    if (rank(coeffs) != ts.p.size()) out.push_back("p-coefficient matrix has deficient rank");
    return out;
}

}  // namespace lieinv
