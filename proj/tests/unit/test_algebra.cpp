#include <doctest.h>

#include "catalog.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/extension.hpp"

using namespace lieinv;

namespace {

Expr P(const char* s) { return parse_expr(s); }

std::vector<std::pair<std::string, LieAlgebra>> algebras() {
    return {{"abelian1", catalog::abelian(1)},
            {"abelian3", catalog::abelian(3)},
            {"heisenberg", catalog::heisenberg()},
            {"worked base", catalog::worked_base()},
            {"oscillator", catalog::oscillator_base()},
            {"sl2", catalog::sl2()},
            {"so3", catalog::so3()},
            {"worked extended", extend(catalog::worked_base(), catalog::worked_rep()).result}};
}

void check_field_brackets(const LieAlgebra& L, const std::vector<VectorField>& t) {
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = a + 1; b < L.dim(); ++b) {
            VectorField lhs = commutator(t[a], t[b]);
            for (std::size_t c = 0; c < L.dim(); ++c)
                for (std::size_t i = 0; i < lhs.components.size(); ++i)
                    lhs.components[i] -= L.constant(a, b, c) * t[c].components[i];
            CHECK(lhs.is_zero());
        }
}

}  // namespace

TEST_CASE("Jacobi check") {
    CHECK(check_lie_algebra(catalog::abelian(3)).ok());
    CHECK(check_lie_algebra(catalog::worked_base()).ok());
    for (const auto& [name, L] : algebras()) {
        INFO(name);
        CHECK(check_lie_algebra(L).ok());
    }
    // [e1,e2]=e1, [e1,e3]=e2: the cyclic sum [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]
    // expands to [e1,e3] + 0 - [e2,e2] = e2.
    const LieAlgebra bad = catalog::make(3, {{1, 2, 1, 1}, {1, 3, 2, 1}});
    const auto report = check_lie_algebra(bad);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("(1,2,3) component 2") != std::string::npos);
}

TEST_CASE("representation checks") {
    const LieAlgebra base = catalog::worked_base();
    CHECK(check_representation(base, Representation(4, std::vector<ExprMatrix>(4, ExprMatrix(4, 4)))).ok());
    CHECK(check_representation(base, catalog::worked_rep()).ok());
    CHECK(check_representation(catalog::oscillator_base(), catalog::oscillator_rep()).ok());
    for (const auto& [name, L] : algebras()) {
        INFO(name);
        CHECK(check_representation(L, adjoint(L)).ok());
        CHECK(check_representation(L, coadjoint(L)).ok());
    }
    // The minus convention flips the matrices.
    std::vector<ExprMatrix> neg;
    const Representation rep = catalog::worked_rep();
    for (const auto& m : rep.matrices()) neg.push_back(-m);
    CHECK_FALSE(check_representation(base, Representation(4, neg)).ok());
    CHECK(check_representation(base, Representation(4, neg, Convention::Minus)).ok());
    CHECK_THROWS_AS(check_representation(base, Representation(2, {ExprMatrix(2, 2)})), Error);
}

TEST_CASE("generators") {
    const auto x = coordinate_names("x", 4);
    const auto t = generators(catalog::worked_rep(), x);
    CHECK(t[0].components == ExprVector{Expr(), Expr(), Expr(), P("x1 + x2")});
    CHECK(t[3].components == ExprVector{P("-x1 - x2"), P("-x2"), P("-x3"), Expr()});
    for (const auto& f : generators(Representation(4, std::vector<ExprMatrix>(2, ExprMatrix(4, 4))), x))
        CHECK(f.is_zero());

    const auto X = coordinate_names("X", 3);
    const auto h = generators(coadjoint(catalog::heisenberg()), X);
    CHECK(h[0].components == ExprVector{Expr(), P("X3"), Expr()});
    CHECK(h[1].components == ExprVector{P("-X3"), Expr(), Expr()});
    CHECK(h[2].is_zero());
}

TEST_CASE("generator fields close under the bracket") {
    check_field_brackets(catalog::worked_base(), generators(catalog::worked_rep(), coordinate_names("x", 4)));
    check_field_brackets(catalog::oscillator_base(), generators(catalog::oscillator_rep(), coordinate_names("x", 4)));
    for (const auto& [name, L] : algebras()) {
        INFO(name);
        check_field_brackets(L, generators(coadjoint(L), coordinate_names("X", L.dim())));
        check_field_brackets(L, generators(adjoint(L), coordinate_names("x", L.dim())));
    }
}

TEST_CASE("invariant counts and index") {
    CHECK(invariant_count(catalog::worked_rep(), 1) == 2);
    CHECK(invariant_count(Representation(4, std::vector<ExprMatrix>(3, ExprMatrix(4, 4))), 1) == 4);
    CHECK(invariant_count(coadjoint(catalog::so3()), 1) == 1);
    CHECK(invariant_count(catalog::oscillator_rep(), 1) == 2);
    CHECK(index(catalog::abelian(3), 1) == 3);
    CHECK(index(catalog::heisenberg(), 1) == 1);
    CHECK(index(extend(catalog::worked_base(), catalog::worked_rep()).result, 1) == 4);
    CHECK(index(catalog::oscillator_base(), 1) == 2);
    for (const auto& [name, L] : algebras()) {
        INFO(name);
        CHECK(index(L, 7) == invariant_count(coadjoint(L), 7));
    }
}

TEST_CASE("dual representation") {
    const Representation T = catalog::worked_rep();
    const Representation D = dual_representation(T);
    CHECK(check_representation(catalog::worked_base(), D).ok());
    CHECK(dual_representation(D).matrices() == T.matrices());
    // Dual generators t^a_Ab X_a d/dX_b, assembled directly from the matrices.
    const ExprVector X = symbols(coordinate_names("X", 4));
    std::vector<ExprVector> rows;
    for (const auto& t : T.matrices()) {
        ExprVector r(4);
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t a = 0; a < 4; ++a) r[b] += t(a, b) * X[a];
        rows.push_back(r);
    }
    const auto g = generators(D, coordinate_names("X", 4));
    for (std::size_t A = 0; A < 4; ++A) CHECK(g[A].components == rows[A]);
    CHECK(invariant_count(D, 3) == 4 - generic_rank(ExprMatrix::from_rows(rows), 5));
}

TEST_CASE("verify invariant") {
    const auto t = generators(catalog::worked_rep(), coordinate_names("x", 4));
    CHECK(verify_invariant(t, P("x2/x3")).kind == VerdictKind::Symbolic);
    CHECK(verify_invariant(t, P("x1/x3 - x2/x3*log(x3)")).kind == VerdictKind::Symbolic);
    const Verdict bad = verify_invariant(t, P("x1"));
    CHECK(bad.kind == VerdictKind::Refuted);
    CHECK_FALSE(bad.witness.empty());
    CHECK(verify_invariant(t, Expr(7)).kind == VerdictKind::Symbolic);
}

TEST_CASE("extension") {
    const auto ext = extend(catalog::worked_base(), catalog::worked_rep());
    const LieAlgebra expected = catalog::make(8, {{1, 4, 1, 1}, {1, 4, 2, 1}, {1, 8, 5, 1}, {1, 8, 6, 1}, {2, 4, 2, 1},
                                                  {2, 8, 6, 1}, {3, 4, 3, 1}, {3, 8, 7, 1}, {4, 5, 5, -1}, {4, 5, 6, -1},
                                                  {4, 6, 6, -1}, {4, 7, 7, -1}});
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) CHECK(ext.result.bracket(a, b) == expected.bracket(a, b));

    const auto triv = extend(catalog::heisenberg(), Representation(2, std::vector<ExprMatrix>(3, ExprMatrix(2, 2))));
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 3; b < 5; ++b) CHECK(is_zero(triv.result.bracket(a, b)));

    for (const auto& [name, L] : algebras()) {
        INFO(name);
        const auto e = extend(L, adjoint(L));
        CHECK(e.result.dim() == 2 * L.dim());
        CHECK(check_lie_algebra(e.result).ok());
        for (std::size_t a = L.dim(); a < 2 * L.dim(); ++a)
            for (std::size_t b = 0; b < 2 * L.dim(); ++b)
                for (std::size_t k = 0; k < L.dim(); ++k) CHECK(e.result.constant(a, b, k).is_zero());
    }
}

TEST_CASE("x-only Casimir criterion equals the representation system") {
    for (const auto& [L, T] : {std::pair{catalog::worked_base(), catalog::worked_rep()},
                               std::pair{catalog::oscillator_base(), catalog::oscillator_rep()}}) {
        const auto ext = extend(L, T);
        std::vector<std::string> coords = coordinate_names("X", L.dim());
        for (const auto& x : coordinate_names("x", T.dim())) coords.push_back(x);
        const auto co = generators(coadjoint(ext.result), coords);
        const auto rep = generators(T, coordinate_names("x", T.dim()));
        for (std::size_t A = 0; A < L.dim(); ++A)
            for (std::size_t a = 0; a < T.dim(); ++a) CHECK(co[A].components[L.dim() + a] == rep[A].components[a]);
        // The V* directions never move x.
        for (std::size_t a = 0; a < T.dim(); ++a)
            for (std::size_t b = 0; b < T.dim(); ++b) CHECK(co[L.dim() + a].components[L.dim() + b].is_zero());
    }
}
