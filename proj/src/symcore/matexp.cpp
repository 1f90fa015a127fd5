#include "lieinv/matexp.hpp"

#include "lieinv/errors.hpp"
#include "lieinv/upoly.hpp"

#include <functional>

namespace lieinv {

ExprVector characteristic_polynomial(const ExprMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
    const std::size_t n = a.rows();
    ExprVector c(n + 1);
    c[n] = Expr(1);
    // Faddeev-LeVerrier.
    ExprMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        const ExprMatrix am = a * m;
        Expr trace;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / Expr(static_cast<long>(k));
    }
    return c;
}

namespace {

Expr horner(const ExprVector& c, const Expr& t) {
    Expr v;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

// Divides c by (t - r) assuming r is a root.
ExprVector deflate(const ExprVector& c, const Expr& r) {
    const std::size_t n = c.size() - 1;
    ExprVector q(n);
    Expr carry;
    for (std::size_t k = n; k-- > 0;) {
        carry = c[k + 1] + carry * r;
        q[k] = carry;
    }
    return q;
}

bool all_constant(const ExprVector& c) {
    for (const auto& e : c)
        if (!e.is_constant()) return false;
    return true;
}

std::string poly_text(const ExprVector& c) {
    Expr t = Expr::symbol("t");
    Expr e;
    for (std::size_t i = 0; i < c.size(); ++i) e += c[i] * pow(t, static_cast<int>(i));
    return e.to_string();
}

void add_root(std::vector<Eigenvalue>& out, const Expr& r, int m) {
    for (auto& ev : out) {
        if (ev.value == r) {
            ev.multiplicity += m;
            return;
        }
    }
    out.push_back({r, m});
}

}  // namespace

std::vector<Eigenvalue> eigenvalues(const ExprMatrix& a, const ProbeOptions& opts) {
    std::string remainder;
    auto out = field_eigenvalues(a, remainder, opts);
    if (!remainder.empty())
        throw Error(ErrorKind::UnsupportedField, "eigenvalues outside the rationals; unsplit factor " + remainder);
    return out;
}

std::vector<Eigenvalue> field_eigenvalues(const ExprMatrix& a, std::string& remainder, const ProbeOptions& opts) {
    remainder.clear();
    ExprVector c = characteristic_polynomial(a);
    std::vector<Eigenvalue> out;
    if (!all_constant(c)) {
        ExprVector candidates{Expr()};
        for (std::size_t i = 0; i < a.rows(); ++i) candidates.push_back(a(i, i));
        for (const auto& r : candidates) {
            int m = 0;
            while (c.size() > 1 && !certainly_nonzero(horner(c, r), "characteristic polynomial at " + r.to_string(), opts)) {
                c = deflate(c, r);
                ++m;
            }
            if (m > 0) add_root(out, r, m);
        }
    }
    if (c.size() > 1) {
        if (!all_constant(c)) {
            remainder = poly_text(c);
            return out;
        }
        std::vector<Rational> q;
        for (const auto& e : c) q.push_back(*e.as_rational());
        RootSplit split = rational_roots(UPoly(q));
        if (split.rest.degree() > 0) remainder = split.rest.to_string("t");
        for (const auto& [r, m] : split.roots) add_root(out, Expr(r), m);
    }
    return out;
}

namespace {

// p(A) where p interpolates the prescribed derivatives at each eigenvalue:
// p^(k)(value) = f(value, k) for k < multiplicity.
ExprMatrix hermite_function(const ExprMatrix& a, const std::vector<Eigenvalue>& spectrum,
                            const std::function<Expr(const Expr&, int)>& f, const ProbeOptions& opts) {
    const std::size_t n = a.rows();
    ExprMatrix sys(n, n);
    ExprVector rhs(n);
    std::size_t row = 0;
    for (const auto& ev : spectrum) {
        for (int k = 0; k < ev.multiplicity; ++k, ++row) {
            for (std::size_t j = static_cast<std::size_t>(k); j < n; ++j) {
                Rational falling = 1;
                for (int i = 0; i < k; ++i) falling *= static_cast<long>(j) - i;
                sys(row, j) = Expr(falling) * pow(ev.value, static_cast<int>(j) - k);
            }
            rhs[row] = f(ev.value, k);
        }
    }
    auto coeffs = solve(sys, rhs, opts);
    if (!coeffs) throw Error(ErrorKind::Construction, "singular interpolation system");
    ExprMatrix result(n, n);
    ExprMatrix power = ExprMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!(*coeffs)[j].is_zero()) result = result + (*coeffs)[j] * power;
        if (j + 1 < n) power = power * a;
    }
    return result;
}

}  // namespace

JordanChevalley jordan_chevalley(const ExprMatrix& a, const ProbeOptions& opts) {
    auto spectrum = eigenvalues(a, opts);
    ExprMatrix s;
    if (spectrum.size() == 1) {
        s = spectrum[0].value * ExprMatrix::identity(a.rows());
    } else {
        s = hermite_function(a, spectrum, [](const Expr& v, int k) { return k == 0 ? v : Expr(); }, opts);
    }
    return {s, a - s, std::move(spectrum)};
}

ExprMatrix exp_matrix(const ExprMatrix& a, const Expr& u, const ProbeOptions& opts) {
    const std::size_t n = a.rows();
    if (n == 0) return {};
    if (a.is_zero()) return ExprMatrix::identity(n);
    auto spectrum = eigenvalues(a, opts);
    if (spectrum.size() == 1) {
        const Expr& lam = spectrum[0].value;
        const ExprMatrix nil = a - lam * ExprMatrix::identity(n);
        ExprMatrix sum = ExprMatrix::identity(n);
        ExprMatrix term = ExprMatrix::identity(n);
        for (std::size_t k = 1; k < n; ++k) {
            term = (u / Expr(static_cast<long>(k))) * (term * nil);
            if (term.is_zero()) break;
            sum = sum + term;
        }
        return lam.is_zero() ? sum : exp(u * lam) * sum;
    }
    return hermite_function(
        a, spectrum, [&u](const Expr& v, int k) { return pow(u, k) * exp(u * v); }, opts);
}

}  // namespace lieinv
