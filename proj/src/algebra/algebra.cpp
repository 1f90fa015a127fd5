#include "lieinv/algebra.hpp"

#include "lieinv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lieinv {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : n_(dim), labels_(std::move(labels)), c_(dim * dim * dim) {
    if (labels_.empty())
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + idx(i));
    if (labels_.size() != dim) throw Error(ErrorKind::DimensionMismatch, "label count differs from dimension");
}

void LieAlgebra::set_constant(std::size_t a, std::size_t b, std::size_t k, const Expr& value) {
    if (a >= n_ || b >= n_ || k >= n_) throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
    if (a == b && !value.is_zero()) throw Error(ErrorKind::Validation, "nonzero bracket of a basis vector with itself");
    c_[(a * n_ + b) * n_ + k] = value;
    c_[(b * n_ + a) * n_ + k] = -value;
}

ExprVector LieAlgebra::bracket(std::size_t a, std::size_t b) const {
    ExprVector out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = constant(a, b, k);
    return out;
}

ExprVector LieAlgebra::bracket(const ExprVector& x, const ExprVector& y) const {
    ExprVector out(n_);
    for (std::size_t a = 0; a < n_; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < n_; ++b) {
            if (y[b].is_zero() || a == b) continue;
            const Expr w = x[a] * y[b];
            for (std::size_t k = 0; k < n_; ++k)
                if (!constant(a, b, k).is_zero()) out[k] += w * constant(a, b, k);
        }
    }
    return out;
}

ExprMatrix LieAlgebra::ad(std::size_t k) const {
    ExprMatrix m(n_, n_);
    for (std::size_t l = 0; l < n_; ++l)
        for (std::size_t r = 0; r < n_; ++r) m(r, l) = constant(k, l, r);
    return m;
}

ExprMatrix LieAlgebra::ad(const ExprVector& x) const {
    ExprMatrix m(n_, n_);
    for (std::size_t k = 0; k < n_; ++k)
        if (!x[k].is_zero()) m = m + x[k] * ad(k);
    return m;
}

ExprMatrix LieAlgebra::commutator_matrix(const ExprVector& covector) const {
    ExprMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            Expr s;
            for (std::size_t k = 0; k < n_; ++k)
                if (!constant(i, j, k).is_zero()) s += constant(i, j, k) * covector[k];
            m(i, j) = s;
            m(j, i) = -s;
        }
    return m;
}

ExprMatrix LieAlgebra::killing_form() const {
    std::vector<ExprMatrix> ads;
    for (std::size_t k = 0; k < n_; ++k) ads.push_back(ad(k));
    ExprMatrix kf(n_, n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a; b < n_; ++b) {
            const ExprMatrix p = ads[a] * ads[b];
            Expr tr;
            for (std::size_t i = 0; i < n_; ++i) tr += p(i, i);
            kf(a, b) = tr;
            kf(b, a) = tr;
        }
    return kf;
}

bool LieAlgebra::is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const Expr& e) { return e.is_zero(); });
}

ValidationReport check_lie_algebra(const LieAlgebra& L) {
    ValidationReport report;
    const std::size_t n = L.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                if (!(L.constant(a, b, k) + L.constant(b, a, k)).is_zero())
                    report.violations.push_back("antisymmetry fails for (" + idx(a) + "," + idx(b) + ") component " + idx(k));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t d = b + 1; d < n; ++d) {
                for (std::size_t f = 0; f < n; ++f) {
                    Expr s;
                    for (std::size_t e = 0; e < n; ++e) {
                        s += L.constant(a, b, e) * L.constant(e, d, f);
                        s += L.constant(b, d, e) * L.constant(e, a, f);
                        s += L.constant(d, a, e) * L.constant(e, b, f);
                    }
                    if (test_zero(s).verdict == ZeroVerdict::NonZero)
                        report.violations.push_back("Jacobi identity fails for (" + idx(a) + "," + idx(b) + "," + idx(d) +
                                                    ") component " + idx(f) + ": " + s.to_string());
                }
            }
    return report;
}

Representation::Representation(std::size_t dim, std::vector<ExprMatrix> matrices, Convention convention)
    : dim_(dim), m_(std::move(matrices)) {
    for (std::size_t a = 0; a < m_.size(); ++a) {
        if (m_[a].rows() != dim || m_[a].cols() != dim)
            throw Error(ErrorKind::DimensionMismatch, "matrix " + idx(a) + " is not " + std::to_string(dim) + "x" +
                                                          std::to_string(dim));
        if (convention == Convention::Minus) m_[a] = -m_[a];
    }
}

ValidationReport check_representation(const LieAlgebra& L, const Representation& T) {
    if (T.algebra_dim() != L.dim())
        throw Error(ErrorKind::DimensionMismatch, "representation has " + std::to_string(T.algebra_dim()) +
                                                      " matrices for an algebra of dimension " + std::to_string(L.dim()));
    ValidationReport report;
    const std::size_t n = L.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            ExprMatrix d = T.matrix(a) * T.matrix(b) - T.matrix(b) * T.matrix(a);
            for (std::size_t c = 0; c < n; ++c)
                if (!L.constant(a, b, c).is_zero()) d = d - L.constant(a, b, c) * T.matrix(c);
            bool bad = false;
            for (std::size_t r = 0; r < d.rows() && !bad; ++r)
                for (std::size_t k = 0; k < d.cols() && !bad; ++k)
                    bad = test_zero(d(r, k)).verdict == ZeroVerdict::NonZero;
            if (bad) report.violations.push_back("homomorphism fails for pair (" + idx(a) + "," + idx(b) + ")");
        }
    return report;
}

Representation adjoint(const LieAlgebra& L) {
    std::vector<ExprMatrix> m;
    for (std::size_t k = 0; k < L.dim(); ++k) m.push_back(L.ad(k));
    return Representation(L.dim(), std::move(m));
}

Representation coadjoint(const LieAlgebra& L) {
    std::vector<ExprMatrix> m;
    for (std::size_t k = 0; k < L.dim(); ++k) m.push_back(-L.ad(k).transpose());
    return Representation(L.dim(), std::move(m));
}

Representation dual_representation(const Representation& T) {
    std::vector<ExprMatrix> m;
    for (const auto& t : T.matrices()) m.push_back(-t.transpose());
    return Representation(T.dim(), std::move(m));
}

Expr VectorField::apply(const Expr& f) const {
    Expr out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!components[i].is_zero() && f.depends_on(coords[i])) out += components[i] * differentiate(f, coords[i]);
    return out;
}

bool VectorField::is_zero() const { return lieinv::is_zero(components); }

VectorField commutator(const VectorField& v, const VectorField& w) {
    if (v.coords != w.coords) throw Error(ErrorKind::DimensionMismatch, "vector fields on different coordinates");
    VectorField out{v.coords, ExprVector(v.coords.size())};
    for (std::size_t i = 0; i < v.coords.size(); ++i) out.components[i] = v.apply(w.components[i]) - w.apply(v.components[i]);
    return out;
}

std::vector<std::string> coordinate_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + idx(i));
    return out;
}

std::vector<Expr> symbols(const std::vector<std::string>& names) {
    std::vector<Expr> out;
    for (const auto& n : names) out.push_back(Expr::symbol(n));
    return out;
}

std::vector<VectorField> generators(const Representation& T, const std::vector<std::string>& coords) {
    if (coords.size() != T.dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate count differs from dim V");
    const ExprVector x = symbols(coords);
    std::vector<VectorField> out;
    for (const auto& t : T.matrices()) {
        VectorField f{coords, t * x};
        for (auto& c : f.components) c = -c;
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t generic_rank(const ExprMatrix& m, std::uint64_t seed) {
    std::set<std::string, std::less<>> names;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& s : m(r, c).free_symbols()) names.insert(s);
    if (names.empty()) return rank(m);
    const std::vector<std::string> vars(names.begin(), names.end());
    std::size_t best = 0;
    ExprMatrix best_eval;
    for (int i = 0; i < 3; ++i) {
        const Bindings b = to_bindings(rational_point(vars, seed, i));
        ExprMatrix ev = m.map([&b](const Expr& e) { return substitute(e, b); });
        const std::size_t r = rank(ev);
        if (i == 0 || r > best) {
            best = r;
            best_eval = ev;
        }
    }
    if (best == 0) {
        if (!m.is_zero()) throw Error(ErrorKind::Decidability, "generic rank: nonzero matrix vanished at every probe point");
        return 0;
    }
    const auto cols = rref(best_eval).pivots;
    const auto rows = rref(best_eval.transpose()).pivots;
    ExprMatrix minor(best, best);
    for (std::size_t i = 0; i < best; ++i)
        for (std::size_t j = 0; j < best; ++j) minor(i, j) = m(rows[i], cols[j]);
    if (!certainly_nonzero(det(minor), "rank certificate minor"))
        throw Error(ErrorKind::Decidability, "generic rank certificate failed");
    return best;
}

std::size_t invariant_count(const Representation& T, std::uint64_t seed) {
    const auto fields = generators(T, coordinate_names("x", T.dim()));
    std::vector<ExprVector> rows;
    for (const auto& f : fields) rows.push_back(f.components);
    if (rows.empty()) return T.dim();
    return T.dim() - generic_rank(ExprMatrix::from_rows(rows), seed);
}

std::size_t index(const LieAlgebra& L, std::uint64_t seed) {
    const ExprVector X = symbols(coordinate_names("X", L.dim()));
    return L.dim() - generic_rank(L.commutator_matrix(X), seed);
}

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Symbolic: return "symbolic";
        case VerdictKind::NumericOnly: return "numeric-only";
        case VerdictKind::Refuted: return "refuted";
    }
    return "refuted";
}

Verdict verify_invariant(const std::vector<VectorField>& fields, const Expr& J, const VerifyOptions& opts) {
    std::vector<Expr> residuals;
    for (const auto& f : fields) residuals.push_back(f.apply(J));
    Verdict v;
    if (std::all_of(residuals.begin(), residuals.end(), [](const Expr& e) { return e.is_zero(); })) {
        v.kind = VerdictKind::Symbolic;
        return v;
    }
    std::set<std::string, std::less<>> names(J.free_symbols().begin(), J.free_symbols().end());
    for (const auto& r : residuals) names.insert(r.free_symbols().begin(), r.free_symbols().end());
    const std::vector<std::string> vars(names.begin(), names.end());
    int evaluated = 0;
    for (int i = 0; i < opts.points * 10 && evaluated < opts.points; ++i) {
        const NumericPoint pt = probe_point(vars, opts.seed, i);
        std::vector<double> values;
        try {
            for (const auto& r : residuals) values.push_back(eval_numeric(r, pt));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Domain) continue;
            throw;
        }
        ++evaluated;
        for (std::size_t a = 0; a < values.size(); ++a) {
            const double res = std::fabs(values[a]);
            v.max_residual = std::max(v.max_residual, std::isfinite(res) ? res : HUGE_VAL);
            if (!(res < opts.tolerance)) {
                v.kind = VerdictKind::Refuted;
                v.witness = pt;
                v.detail = "generator " + idx(a) + " gives " + residuals[a].to_string();
                return v;
            }
        }
    }
    if (evaluated == 0) {
        v.kind = VerdictKind::Refuted;
        v.detail = "no probe point inside the chart";
        return v;
    }
    v.kind = VerdictKind::NumericOnly;
    return v;
}

}  // namespace lieinv
