#include <doctest.h>

#include "lieinv/errors.hpp"
#include "lieinv/matexp.hpp"
#include "lieinv/upoly.hpp"

#include <cmath>
#include <random>

using namespace lieinv;

namespace {

Expr P(const char* s) { return parse_expr(s); }

ExprMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<ExprVector> out;
    for (const auto& r : rows) {
        ExprVector v;
        for (const char* s : r) v.push_back(parse_expr(s));
        out.push_back(v);
    }
    return ExprMatrix::from_rows(out);
}

// Cofactor expansion along the first row.
Expr laplace_det(const ExprMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Expr sum;
    for (std::size_t c = 0; c < n; ++c) {
        ExprMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Expr term = m(0, c) * laplace_det(minor);
        sum = (c % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

ExprMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    ExprMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Expr(d(rng));
    return m;
}

}  // namespace

TEST_CASE("nullspace examples") {
    auto z = nullspace(ExprMatrix(2, 2));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == ExprVector{Expr(1), Expr()});
    CHECK(z[1] == ExprVector{Expr(), Expr(1)});
    auto n = nullspace(M({{"0", "1"}, {"0", "0"}}));
    REQUIRE(n.size() == 1);
    CHECK(n[0] == ExprVector{Expr(1), Expr()});
}

TEST_CASE("rank plus nullity equals columns") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 6;
        ExprMatrix m = random_matrix(rng, rows, cols, 2);
        if (trial % 3 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Expr(2);
        const auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == cols);
        for (const auto& v : ns) CHECK(is_zero(m * v));
    }
}

TEST_CASE("parametric elimination") {
    const ExprMatrix m = M({{"a", "b", "1"}, {"b", "a", "1"}, {"a + b", "a + b", "2"}});
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m * ns[0]));
    CHECK(det(m).is_zero());
    const ExprMatrix g = M({{"x", "1", "0"}, {"y", "x", "exp(z)"}, {"1", "0", "x*y"}});
    CHECK(det(g) == laplace_det(g));
    CHECK(inverse(g) * g == ExprMatrix::identity(3));
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const ExprMatrix m = random_matrix(rng, n, n, 3);
        CHECK(det(m) == laplace_det(m));
    }
}

TEST_CASE("solve and span tests") {
    const ExprMatrix m = M({{"1", "2"}, {"3", "4"}});
    auto x = solve(m, {Expr(5), Expr(6)});
    REQUIRE(x);
    CHECK(m * *x == ExprVector{Expr(5), Expr(6)});
    CHECK_FALSE(solve(M({{"1", "1"}, {"1", "1"}}), {Expr(1), Expr(2)}));
    CHECK(same_span({{Expr(1), Expr(1)}, {Expr(1), Expr(-1)}}, {{Expr(1), Expr()}, {Expr(), Expr(1)}}));
    CHECK(in_span({{P("j"), Expr(1)}}, {P("j^2"), P("j")}));
    CHECK_FALSE(in_span({{P("j"), Expr(1)}}, {Expr(1), Expr(1)}));
}

TEST_CASE("rational roots") {
    // (t - 1/2)^2 (t + 3) (t^2 + 1)
    UPoly p = UPoly({Rational(-1, 2), 1}) * UPoly({Rational(-1, 2), 1}) * UPoly({3, 1}) * UPoly({1, 0, 1});
    auto split = rational_roots(p);
    REQUIRE(split.roots.size() == 2);
    CHECK(split.roots[0] == std::pair<Rational, int>(Rational(-3), 1));
    CHECK(split.roots[1] == std::pair<Rational, int>(Rational(1, 2), 2));
    CHECK(split.rest == UPoly({1, 0, 1}));
}

TEST_CASE("eigenvalues") {
    auto ev = eigenvalues(M({{"2", "1"}, {"0", "2"}}));
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].value == Expr(2));
    CHECK(ev[0].multiplicity == 2);
    CHECK_THROWS_AS(eigenvalues(M({{"0", "1"}, {"-1", "0"}})), Error);
    auto pe = eigenvalues(M({{"a", "1"}, {"0", "b"}}));
    CHECK(pe.size() == 2);
}

TEST_CASE("jordan chevalley") {
    const ExprMatrix a = M({{"1", "1", "0"}, {"0", "1", "0"}, {"0", "0", "2"}});
    auto jc = jordan_chevalley(a);
    CHECK(jc.semisimple == M({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "2"}}));
    CHECK(jc.semisimple * jc.nilpotent == jc.nilpotent * jc.semisimple);
    CHECK((jc.nilpotent * jc.nilpotent).is_zero());
}

TEST_CASE("matrix exponential satisfies its differential equation") {
    const Expr u = Expr::symbol("u");
    for (const auto& a : {M({{"0", "1"}, {"0", "0"}}), M({{"1", "1", "0"}, {"0", "1", "0"}, {"0", "0", "-2"}}),
                          M({{"-1", "0", "0", "0"}, {"-1", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"1", "0", "0", "0"}}),
                          M({{"a", "1"}, {"0", "b"}}), M({{"3", "1"}, {"1", "3"}})}) {
        const ExprMatrix e = exp_matrix(a, u);
        CHECK(e.map([](const Expr& x) { return substitute(x, {{"u", Expr()}}); }) == ExprMatrix::identity(a.rows()));
        CHECK(e.map([](const Expr& x) { return differentiate(x, "u"); }) == a * e);
        // exp(uA) exp(-uA) = I
        const ExprMatrix inv = e.map([](const Expr& x) { return substitute(x, {{"u", -Expr::symbol("u")}}); });
        CHECK(e * inv == ExprMatrix::identity(a.rows()));
    }
}
