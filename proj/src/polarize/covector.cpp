#include "structure.hpp"

#include "lieinv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

namespace lieinv {

bool is_affine_in_params(const ParamCovector& lambda) {
    for (const auto& e : lambda.entries) {
        if (!e.is_polynomial() || e.is_transcendental()) return false;
        for (const auto& s : e.free_symbols())
            if (std::find(lambda.params.begin(), lambda.params.end(), s) == lambda.params.end()) return false;
        for (const auto& p : lambda.params)
            if (!differentiate(e, p).is_constant()) return false;
    }
    return true;
}

namespace {

// Maximal rank of the form, then a nonzero determinant of the annihilator
// basis paired with the parameter directions.
bool certified(const LieAlgebra& algebra, const ParamCovector& lambda, std::size_t target_rank) {
    const ExprMatrix form = algebra.commutator_matrix(lambda.entries);
    if (rank(form) != target_rank) return false;
    const auto kernel = nullspace(form);
    const std::size_t r = lambda.params.size();
    if (kernel.size() != r) return false;
    if (r == 0) return true;
    ExprMatrix m(r, r);
    for (std::size_t mu = 0; mu < r; ++mu)
        for (std::size_t alpha = 0; alpha < r; ++alpha)
            for (std::size_t i = 0; i < algebra.dim(); ++i)
                m(mu, alpha) += kernel[mu][i] * differentiate(lambda.entries[i], lambda.params[alpha]);
    return !det(m).is_zero();
}

}  // namespace

bool covector_certificate(const LieAlgebra& algebra, const ParamCovector& lambda, std::uint64_t seed) {
    const std::size_t r = index(algebra, seed);
    if (lambda.params.size() != r || !is_affine_in_params(lambda)) return false;
    return certified(algebra, lambda, algebra.dim() - r);
}

namespace {

// Parameters on `positions`, constants 0 elsewhere except greedy 1s that
// raise the rank of the form.
std::optional<ParamCovector> place(const LieAlgebra& algebra, const std::vector<std::string>& params,
                                   const std::vector<std::size_t>& positions, const std::vector<std::size_t>& order) {
    const std::size_t n = algebra.dim();
    const std::size_t target = n - params.size();
    ParamCovector lambda{ExprVector(n), params};
    for (std::size_t a = 0; a < positions.size(); ++a) lambda.entries[positions[a]] = Expr::symbol(params[a]);
    std::size_t current = rank(algebra.commutator_matrix(lambda.entries));
    for (std::size_t i : order) {
        if (current == target) break;
        if (std::find(positions.begin(), positions.end(), i) != positions.end()) continue;
        lambda.entries[i] = Expr(1);
        const std::size_t raised = rank(algebra.commutator_matrix(lambda.entries));
        if (raised > current)
            current = raised;
        else
            lambda.entries[i] = Expr();
    }
    if (!certified(algebra, lambda, target)) return std::nullopt;
    return lambda;
}

bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t r = subset.size();
    for (std::size_t i = r; i-- > 0;) {
        if (subset[i] < n - r + i) {
            ++subset[i];
            for (std::size_t k = i + 1; k < r; ++k) subset[k] = subset[k - 1] + 1;
            return true;
        }
    }
    return false;
}

constexpr int kPivotAttempts = 8;
constexpr int kSubsetBudget = 512;

}  // namespace

ParamCovector parametrize_covector(const LieAlgebra& algebra, std::uint64_t seed) {
    const std::size_t n = algebra.dim();
    const std::size_t r = index(algebra, seed);
    const auto names = coordinate_names("X", n);
    const std::vector<std::string> params = coordinate_names("j", r);
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::size_t> order = identity;
    std::mt19937_64 rng(seed);

    // Pivot columns of the annihilator at seeded points, in shuffled column
    // orders.
    for (int attempt = 0; attempt < kPivotAttempts; ++attempt) {
        if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
        const RationalPoint point = rational_point(names, seed, attempt);
        ExprVector x0;
        for (const auto& name : names) x0.push_back(Expr(point.at(name)));
        const auto kernel = nullspace(algebra.commutator_matrix(x0));
        if (kernel.size() != r) continue;
        std::vector<ExprVector> permuted;
        for (const auto& v : kernel) {
            ExprVector w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = v[order[i]];
            permuted.push_back(w);
        }
        std::vector<std::size_t> positions;
        for (std::size_t pivot : rref(ExprMatrix::from_rows(permuted)).pivots) positions.push_back(order[pivot]);
        std::sort(positions.begin(), positions.end());
        if (auto lambda = place(algebra, params, positions, identity)) return *lambda;
    }

    // Then every position set in lexicographic order.
    std::vector<std::size_t> subset(r);
    std::iota(subset.begin(), subset.end(), 0);
    int budget = kSubsetBudget;
    do {
        if (auto lambda = place(algebra, params, subset, identity)) return *lambda;
    } while (--budget > 0 && next_subset(subset, n));
    throw Error(ErrorKind::ParametrizationExhausted, "no certified covector within the search budget");
}

}  // namespace lieinv
