#include "combine.hpp"

#include "lieinv/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace lieinv::detail {

namespace {

constexpr int kMaxDegree = 2;
constexpr double kKernelTolerance = 1e-8;
constexpr long kMaxDenominator = 10000;

std::vector<std::vector<int>> laurent_exponents(std::size_t r) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(r, 0);
    auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == r) {
            if (budget < kMaxDegree) out.push_back(e);
            return;
        }
        for (int k = -budget; k <= budget; ++k) {
            e[i] = k;
            self(self, i + 1, budget - std::abs(k));
        }
        e[i] = 0;
    };
    rec(rec, 0, kMaxDegree);
    return out;
}

std::optional<Rational> rationalize(double x) {
    // Continued fraction with a bounded denominator.
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double v = x;
    for (int i = 0; i < 40; ++i) {
        const double a = std::floor(v);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > kMaxDenominator) break;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-9) return Rational(h1, k1);
        const double frac = v - a;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
    }
    if (k1 != 0 && std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-9) return Rational(h1, k1);
    return std::nullopt;
}

Expr monomial(const ExprVector& base, const std::vector<int>& e) {
    Expr m(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) m *= pow(base[i], e[i]);
    return m;
}

}  // namespace

ExprVector x_only_combinations(const ExprVector& invariants, const std::vector<std::string>& eliminate,
                               const std::vector<std::string>& coords, std::uint64_t seed) {
    const std::size_t r = invariants.size();
    if (r == 0 || eliminate.empty()) return {};
    auto exps = laurent_exponents(r);
    exps.erase(std::remove_if(exps.begin(), exps.end(),
                              [](const std::vector<int>& e) {
                                  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
                              }),
               exps.end());
    const auto m = static_cast<Eigen::Index>(exps.size());

    // Rows: d(monomial)/dX_A at probe points.
    std::vector<Eigen::VectorXd> rows;
    const int wanted_points = static_cast<int>(exps.size() / eliminate.size()) + 4;
    for (int pt = 0, tried = 0; pt < wanted_points && tried < 4 * wanted_points; ++tried) {
        const NumericPoint point = probe_point(coords, seed, 1000 + tried);
        try {
            std::vector<double> value(r);
            std::vector<std::vector<double>> grad(r, std::vector<double>(eliminate.size()));
            for (std::size_t i = 0; i < r; ++i) {
                value[i] = eval_numeric(invariants[i], point);
                for (std::size_t a = 0; a < eliminate.size(); ++a)
                    grad[i][a] = eval_numeric(differentiate(invariants[i], eliminate[a]), point);
            }
            if (std::any_of(value.begin(), value.end(), [](double v) { return std::abs(v) < 1e-6; })) continue;
            for (std::size_t a = 0; a < eliminate.size(); ++a) {
                Eigen::VectorXd row(m);
                for (Eigen::Index k = 0; k < m; ++k) {
                    const auto& e = exps[static_cast<std::size_t>(k)];
                    double mono = 1, d = 0;
                    for (std::size_t i = 0; i < r; ++i) mono *= std::pow(value[i], e[i]);
                    for (std::size_t i = 0; i < r; ++i)
                        if (e[i] != 0) d += e[i] * mono / value[i] * grad[i][a];
                    row(k) = d;
                }
                const double scale = row.cwiseAbs().maxCoeff();
                if (scale > 0) row /= scale;
                rows.push_back(row);
            }
            ++pt;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Domain) throw;
        }
    }
    if (rows.empty()) return {};
    Eigen::MatrixXd sys(static_cast<Eigen::Index>(rows.size()), m);
    for (std::size_t i = 0; i < rows.size(); ++i) sys.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > kKernelTolerance * s(0)) ++rank;
    const Eigen::Index nullity = m - rank;
    if (nullity == 0) return {};
    Eigen::MatrixXd kernel = svd.matrixV().rightCols(nullity).transpose();

    // Reduced echelon form so that rational kernels come out rational.
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m && row < kernel.rows(); ++col) {
        Eigen::Index best = row;
        for (Eigen::Index i = row; i < kernel.rows(); ++i)
            if (std::abs(kernel(i, col)) > std::abs(kernel(best, col))) best = i;
        if (std::abs(kernel(best, col)) < 1e-7) continue;
        kernel.row(row).swap(kernel.row(best));
        kernel.row(row) /= kernel(row, col);
        for (Eigen::Index i = 0; i < kernel.rows(); ++i)
            if (i != row) kernel.row(i) -= kernel(i, col) * kernel.row(row);
        ++row;
    }

    ExprVector out;
    for (Eigen::Index i = 0; i < row; ++i) {
        Expr combo;
        bool ok = true;
        for (Eigen::Index k = 0; k < m && ok; ++k) {
            if (std::abs(kernel(i, k)) < 1e-9) continue;
            const auto q = rationalize(kernel(i, k));
            if (!q) ok = false;
            else combo += Expr(*q) * monomial(invariants, exps[static_cast<std::size_t>(k)]);
        }
        if (!ok || combo.is_constant()) continue;
        bool free = true;
        for (const auto& a : eliminate)
            if (test_zero(differentiate(combo, a)).verdict == ZeroVerdict::NonZero) free = false;
        if (free) out.push_back(combo);
    }
    return out;
}

}  // namespace lieinv::detail
