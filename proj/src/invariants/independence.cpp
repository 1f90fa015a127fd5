#include "combine.hpp"

#include "lieinv/detail/expr_node.hpp"
#include "lieinv/errors.hpp"

#include <Eigen/Dense>

namespace lieinv {

const char* to_string(Independence verdict) {
    switch (verdict) {
        case Independence::Independent: return "independent";
        case Independence::Dependent: return "dependent";
        case Independence::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace detail {

namespace {

constexpr double kRankTolerance = 1e-9;

std::size_t numeric_rank(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > kRankTolerance * s(0)) ++r;
    return r;
}

}  // namespace

std::optional<std::size_t> jacobian_rank(const ExprVector& functions, const std::vector<std::string>& coords,
                                         const NumericPoint& point) {
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(functions.size()), static_cast<Eigen::Index>(coords.size()));
    try {
        for (std::size_t i = 0; i < functions.size(); ++i)
            for (std::size_t k = 0; k < coords.size(); ++k)
                jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                    eval_numeric(differentiate(functions[i], coords[k]), point);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Domain) return std::nullopt;
        throw;
    }
    if (!jac.allFinite()) return std::nullopt;
    return numeric_rank(jac);
}

ExprVector independent_subset(const ExprVector& functions, const std::vector<std::string>& coords,
                              std::uint64_t seed) {
    ExprVector kept;
    for (const auto& f : functions) {
        if (f.is_constant()) continue;
        ExprVector trial = kept;
        trial.push_back(f);
        if (functional_independence(trial, coords, seed).verdict == Independence::Independent) kept = std::move(trial);
    }
    return kept;
}

Expr tidy(const Expr& e) {
    if (e.is_zero() || e.is_constant()) return e;
    const Poly& num = e.node().num;
    Rational content = abs(num.front().coeff);
    for (const auto& t : num) {
        // gcd of the numerators over lcm of the denominators
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), content.get_num().get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), content.get_den().get_mpz_t(), t.coeff.get_den().get_mpz_t());
        content = Rational(g, l);
    }
    if (sgn(num.front().coeff) < 0) content = -content;
    return e / Expr(content);
}

}  // namespace detail

IndependenceReport functional_independence(const ExprVector& functions, const std::vector<std::string>& coords,
                                           std::uint64_t seed, int points) {
    IndependenceReport report;
    for (int i = 0; i < points; ++i) {
        const auto r = detail::jacobian_rank(functions, coords, probe_point(coords, seed, i));
        if (!r) continue;
        ++report.points_used;
        report.rank = std::max(report.rank, *r);
    }
    if (report.points_used == 0) return report;
    report.verdict = report.rank == functions.size() ? Independence::Independent : Independence::Dependent;
    return report;
}

bool functionally_dependent(const ExprVector& basis, const Expr& candidate, const std::vector<std::string>& coords,
                            std::uint64_t seed, int points) {
    ExprVector stacked = basis;
    stacked.push_back(candidate);
    int used = 0;
    for (int i = 0; i < points; ++i) {
        const NumericPoint pt = probe_point(coords, seed, i);
        const auto a = detail::jacobian_rank(basis, coords, pt);
        const auto b = detail::jacobian_rank(stacked, coords, pt);
        if (!a || !b) continue;
        ++used;
        if (*b > *a) return false;
    }
    return used > 0;
}

}  // namespace lieinv
