#include <doctest.h>

#include "catalog.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/legendre.hpp"

using namespace lieinv;

namespace {

Expr P(const char* s) { return parse_expr(s); }

constexpr std::uint64_t kSeed = 20240917;

const std::vector<std::string> x4{"x1", "x2", "x3", "x4"};
const std::vector<std::string> X4{"X1", "X2", "X3", "X4"};

Expr rotation_sheaf() { return P("alpha1*(x2^2 + x3^2 - 2*x1*x4) + alpha2*x4"); }

}  // namespace

TEST_CASE("sheaf construction") {
    const auto sheaf = make_sheaf({P("x1"), P("x2^2")});
    CHECK(sheaf.params == std::vector<std::string>{"alpha1", "alpha2"});
    CHECK(sheaf.combined() == P("alpha1*x1 + alpha2*x2^2"));
}

TEST_CASE("Hessian determinant") {
    CHECK(hessian_nondegenerate(P("(x1^2 + x2^2 + x3^2)/2"), {"x1", "x2", "x3"}).determinant == P("1"));
    const auto linear = hessian_nondegenerate(P("x1"), {"x1", "x2"});
    CHECK_FALSE(linear.nondegenerate);
    CHECK(linear.determinant.is_zero());
    const auto sheaf = hessian_nondegenerate(rotation_sheaf(), x4);
    CHECK(sheaf.nondegenerate);
    CHECK(sheaf.determinant == P("-16*alpha1^4"));
}

TEST_CASE("Legendre transform examples") {
    SUBCASE("self-dual quadratic") {
        const auto t = legendre_transform(P("(x1^2 + x2^2)/2"), {"x1", "x2"}, {"X1", "X2"});
        CHECK(t.value == P("(X1^2 + X2^2)/2"));
    }
    SUBCASE("exponential") {
        const auto t = legendre_transform(P("exp(x1)"), {"x1"}, {"X1"});
        CHECK(t.value == P("X1*log(X1) - X1"));
        REQUIRE(t.chart.size() == 1);
        CHECK(t.chart[0] == P("X1"));
        CHECK(legendre_involution(P("exp(x1)"), {"x1"}, {"X1"}));
    }
    SUBCASE("rotation sheaf") {
        const auto t = legendre_transform(rotation_sheaf(), x4, X4);
        // Direct substitution of the inverse gradient map by hand.
        CHECK(t.value == P("(2*alpha2*X1 + X2^2 + X3^2 - 2*X1*X4)/(4*alpha1)"));
        CHECK(t.inverse.at("x1") == P("(alpha2 - X4)/(2*alpha1)"));
        CHECK(t.inverse.at("x4") == P("-X1/(2*alpha1)"));
        CHECK(legendre_involution(rotation_sheaf(), x4, X4));
    }
    SUBCASE("cubic gradient is not inverted") {
        try {
            legendre_transform(P("x1^4 + x1*x2^3"), {"x1", "x2"}, {"X1", "X2"});
            FAIL("expected gradient-inversion");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::GradientInversion);
        }
    }
}

TEST_CASE("gradient map consistency") {
    for (const char* f : {"(x1^2 + x2^2)/2", "exp(x1) + x2^2", "alpha1*(x1*x2) + x2^2/2"}) {
        const std::vector<std::string> from{"x1", "x2"}, to{"X1", "X2"};
        const Expr J = P(f);
        const auto t = legendre_transform(J, from, to);
        Bindings forward;
        for (std::size_t a = 0; a < 2; ++a) forward[to[a]] = differentiate(J, from[a]);
        for (std::size_t a = 0; a < 2; ++a)
            CHECK(test_zero(substitute(differentiate(t.value, to[a]), forward) - Expr::symbol(from[a])).verdict ==
                  ZeroVerdict::Zero);
    }
}

TEST_CASE("conjugate basis extraction") {
    const auto fields = generators(dual_representation(catalog::oscillator_rep()), X4);
    SUBCASE("rotation sheaf") {
        const auto set = extract_conjugate_basis(P("(2*alpha2*X1 + X2^2 + X3^2 - 2*X1*X4)/(4*alpha1)"),
                                                 {"alpha1", "alpha2"}, X4, fields, kSeed);
        REQUIRE(set.invariants.size() == 2);
        CHECK(set.invariants[0] == P("X1"));
        CHECK(set.invariants[1] == P("2*X1*X4 - X2^2 - X3^2"));
        for (const auto& v : set.verdicts) CHECK(v.kind == VerdictKind::Symbolic);
    }
    SUBCASE("linear parameter coefficient") {
        const Expr coefficient = P("X1");
        CHECK(verify_invariant(fields, coefficient).kind == VerdictKind::Symbolic);
        const auto set = extract_conjugate_basis(P("alpha2*X1 + X1^2"), {"alpha2"}, X4, fields, kSeed);
        REQUIRE(set.invariants.size() == 1);
        CHECK(set.invariants[0] == coefficient);
        CHECK_FALSE(set.diagnostic.empty());
    }
    SUBCASE("self-dual quadratic without a sheaf") {
        const std::vector<std::string> X{"X1", "X2"};
        const auto rot = generators(dual_representation(Representation(2, {catalog::mat({{0, 1}, {-1, 0}})})), X);
        const auto set = extract_conjugate_basis(P("(X1^2 + X2^2)/2"), {}, X, rot, kSeed);
        REQUIRE(set.invariants.size() == 1);
        CHECK(set.invariants[0] == P("X1^2 + X2^2"));
    }
}

TEST_CASE("conjugate invariants of the rotation example") {
    const auto result = conjugate_invariants(catalog::oscillator_base(), catalog::oscillator_rep());
    CHECK(result.involution);
    CHECK(result.determinant == P("-16*alpha1^4"));
    CHECK(result.invariants.status == InvariantStatus::Complete);
    const auto& got = result.invariants.invariants;
    REQUIRE(got.size() == 2);
    for (const Expr want : {P("X2^2 + X3^2 - 2*X1*X4"), P("X1")})
        CHECK(functionally_dependent(got, want, X4, kSeed));
    CHECK(functional_independence(got, X4, kSeed).verdict == Independence::Independent);
}

TEST_CASE("degenerate sheaf is reported") {
    try {
        conjugate_invariants(catalog::worked_base(), catalog::worked_rep());
        FAIL("expected degenerate-invariant");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateInvariant);
        CHECK(e.stage() == "hessian");
    }
}
