#include "lieinv/matrix.hpp"

#include "lieinv/errors.hpp"

#include <algorithm>

namespace lieinv {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

std::string entry_name(std::size_t r, std::size_t c) {
    return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

// Lower is better: rational constants first, then short expressions.
std::size_t pivot_cost(const Expr& e) {
    if (e.is_constant()) return 0;
    return e.term_count() + (e.is_transcendental() ? 1000 : 0);
}

}  // namespace

ExprMatrix ExprMatrix::identity(std::size_t n) {
    ExprMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
    return m;
}

ExprMatrix ExprMatrix::from_rows(const std::vector<ExprVector>& rows) {
    if (rows.empty()) return {};
    ExprMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == m.cols(), "ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExprMatrix ExprMatrix::from_columns(const std::vector<ExprVector>& cols) { return from_rows(cols).transpose(); }

ExprVector ExprMatrix::row(std::size_t r) const {
    return ExprVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExprVector ExprMatrix::column(std::size_t c) const {
    ExprVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

ExprMatrix ExprMatrix::transpose() const {
    ExprMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExprMatrix ExprMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    ExprMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

ExprMatrix ExprMatrix::map(const std::function<Expr(const Expr&)>& f) const {
    ExprMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f(data_[i]);
    return out;
}

bool ExprMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Expr& e) { return e.is_zero(); });
}

bool operator==(const ExprMatrix& a, const ExprMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape");
    ExprMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape");
    ExprMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

ExprMatrix operator-(const ExprMatrix& m) {
    ExprMatrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = -m.data_[i];
    return out;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    require(a.cols_ == b.rows_, "matrix product shape");
    ExprMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Expr& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Expr& y = b(k, c);
                if (!y.is_zero()) out(r, c) += x * y;
            }
        }
    }
    return out;
}

ExprMatrix operator*(const Expr& s, const ExprMatrix& m) {
    return m.map([&s](const Expr& e) { return s * e; });
}

ExprVector operator*(const ExprMatrix& m, const ExprVector& v) {
    require(m.cols_ == v.size(), "matrix-vector shape");
    ExprVector out(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

ExprVector add(const ExprVector& a, const ExprVector& b) {
    require(a.size() == b.size(), "vector sum shape");
    ExprVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

ExprVector scale(const Expr& s, const ExprVector& v) {
    ExprVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Expr dot(const ExprVector& a, const ExprVector& b) {
    require(a.size() == b.size(), "dot product shape");
    Expr s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero(const ExprVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Expr& e) { return e.is_zero(); });
}

ExprVector unit_vector(std::size_t n, std::size_t i) {
    ExprVector v(n);
    v[i] = Expr(1);
    return v;
}

Rref rref(const ExprMatrix& input, const ProbeOptions& opts) {
    ExprMatrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            const Expr& e = m(i, c);
            if (e.is_zero()) continue;
            const std::size_t cost = pivot_cost(e);
            if (best != m.rows() && cost >= best_cost) continue;
            if (!certainly_nonzero(e, entry_name(i, c), opts)) {
                m(i, c) = Expr();
                continue;
            }
            best = i;
            best_cost = cost;
        }
        if (best == m.rows()) continue;
        if (best != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(best, k), m(r, k));
        const Expr inv = Expr(1) / m(r, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = m(r, k) * inv;
        m(r, c) = Expr(1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Expr f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(r, k).is_zero()) m(i, k) = m(i, k) - f * m(r, k);
            m(i, c) = Expr();
        }
        pivots.push_back(c);
        ++r;
    }
    // Entries below the rank that never became pivots may still hold
    // probabilistic zeros; certify them.
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_zero() && !certainly_nonzero(m(i, k), entry_name(i, k), opts)) m(i, k) = Expr();
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const ExprMatrix& input, const ProbeOptions& opts) {
    ExprMatrix m = input;
    Expr prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = m.rows();
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const std::size_t cost = pivot_cost(m(i, c));
            if (p != m.rows() && cost >= best_cost) continue;
            if (certainly_nonzero(m(i, c), entry_name(i, c), opts)) {
                p = i;
                best_cost = cost;
            }
        }
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t k = c + 1; k < m.cols(); ++k)
                m(i, k) = (m(r, c) * m(i, k) - m(i, c) * m(r, k)) / prev;
            m(i, c) = Expr();
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

Expr det(const ExprMatrix& input, const ProbeOptions& opts) {
    require(input.rows() == input.cols(), "determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return Expr(1);
    ExprMatrix m = input;
    Expr prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!m(i, k).is_zero() && certainly_nonzero(m(i, k), entry_name(i, k), opts)) {
                p = i;
                break;
            }
        }
        if (p == n) return Expr();
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Expr();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

ExprMatrix inverse(const ExprMatrix& m, const ProbeOptions& opts) {
    require(m.rows() == m.cols(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    ExprMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Expr(1);
    }
    Rref red = rref(aug, opts);
    if (red.pivots.size() < n || red.pivots[n - 1] != n - 1)
        throw Error(ErrorKind::DivisionByZero, "matrix is singular");
    return red.reduced.block(0, n, n, n);
}

std::optional<ExprVector> solve(const ExprMatrix& m, const ExprVector& b, const ProbeOptions& opts) {
    require(m.rows() == b.size(), "right-hand side length");
    ExprMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Rref red = rref(aug, opts);
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    ExprVector x(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
    return x;
}

std::vector<ExprVector> nullspace(const ExprMatrix& m, const ProbeOptions& opts) {
    Rref red = rref(m, opts);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<ExprVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        ExprVector v(m.cols());
        v[f] = Expr(1);
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ExprVector> row_basis(const std::vector<ExprVector>& vectors, const ProbeOptions& opts) {
    if (vectors.empty()) return {};
    Rref red = rref(ExprMatrix::from_rows(vectors), opts);
    std::vector<ExprVector> out;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) out.push_back(red.reduced.row(i));
    return out;
}

bool same_span(const std::vector<ExprVector>& a, const std::vector<ExprVector>& b, const ProbeOptions& opts) {
    const auto ra = row_basis(a, opts);
    const auto rb = row_basis(b, opts);
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i)
        for (std::size_t k = 0; k < ra[i].size(); ++k)
            if (test_zero(ra[i][k] - rb[i][k], opts).verdict == ZeroVerdict::NonZero) return false;
    return true;
}

bool in_span(const std::vector<ExprVector>& basis, const ExprVector& v, const ProbeOptions& opts) {
    if (is_zero(v)) return true;
    std::vector<ExprVector> rows = basis;
    const std::size_t before = row_basis(rows, opts).size();
    rows.push_back(v);
    return row_basis(rows, opts).size() == before;
}

}  // namespace lieinv
