#include "lieinv/detail/expr_node.hpp"
#include "lieinv/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lieinv::detail {

namespace {

using Exponents = std::vector<int>;
// Keys in descending lex order, so begin() is the leading term and the order
// agrees with compare_monomials when atoms are indexed ascending.
using MPoly = std::map<Exponents, Rational, std::greater<>>;

// Variables are the atoms followed by the distinct exp arguments, each
// exp(E) treated as an independent variable. A factorization in that freer
// ring is still valid after the exp relations are imposed.
struct AtomIndex {
    std::vector<Atom> atoms;
    std::vector<Expr> exps;

    void add(const Poly& p) {
        for (const auto& t : p) {
            for (const auto& pw : t.mono.powers) atoms.push_back(pw.first);
            if (!t.mono.exp_arg.is_zero()) exps.push_back(t.mono.exp_arg);
        }
    }
    void finalize() {
        std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return compare_atoms(a, b) < 0; });
        atoms.erase(std::unique(atoms.begin(), atoms.end(),
                                [](const Atom& a, const Atom& b) { return compare_atoms(a, b) == 0; }),
                    atoms.end());
        std::sort(exps.begin(), exps.end());
        exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    }
    std::size_t size() const { return atoms.size() + exps.size(); }
    std::size_t find(const Atom& a) const {
        auto it = std::lower_bound(atoms.begin(), atoms.end(), a,
                                   [](const Atom& x, const Atom& y) { return compare_atoms(x, y) < 0; });
        return static_cast<std::size_t>(it - atoms.begin());
    }
    std::size_t find_exp(const Expr& e) const {
        auto it = std::lower_bound(exps.begin(), exps.end(), e);
        return atoms.size() + static_cast<std::size_t>(it - exps.begin());
    }

    MPoly to_mpoly(const Poly& p) const {
        MPoly out;
        for (const auto& t : p) {
            Exponents e(size(), 0);
            for (const auto& [atom, k] : t.mono.powers) e[find(atom)] = k;
            if (!t.mono.exp_arg.is_zero()) e[find_exp(t.mono.exp_arg)] = 1;
            out.emplace(std::move(e), t.coeff);
        }
        return out;
    }

    Poly to_poly(const MPoly& m) const {
        Poly out;
        out.reserve(m.size());
        for (const auto& [e, c] : m) {
            Monomial mono;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (e[i] > 0) mono.powers.emplace_back(atoms[i], e[i]);
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (e[atoms.size() + i] > 0) mono.exp_arg = mono.exp_arg + Expr(e[atoms.size() + i]) * exps[i];
            out.push_back(Term{std::move(mono), c});
        }
        if (!exps.empty()) poly_canonicalize(out);
        return out;
    }
};

std::size_t nvars(const MPoly& p) { return p.empty() ? 0 : p.begin()->first.size(); }

bool is_const(const MPoly& p) {
    if (p.empty()) return true;
    if (p.size() != 1) return false;
    const auto& e = p.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

MPoly constant(const Rational& c, std::size_t n) {
    MPoly out;
    if (c != 0) out.emplace(Exponents(n, 0), c);
    return out;
}

void add_into(MPoly& a, const MPoly& b, const Rational& scale) {
    for (const auto& [e, c] : b) {
        auto [it, inserted] = a.emplace(e, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) a.erase(it);
        }
    }
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
        if (out.size() > kMaxTerms) throw Error(ErrorKind::Resource, "polynomial gcd exceeded size limit");
    }
    return out;
}

MPoly shift_mul(const MPoly& a, const Exponents& shift, const Rational& c) {
    MPoly out;
    for (const auto& [e, k] : a) {
        Exponents s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + shift[i];
        out.emplace(std::move(s), k * c);
    }
    return out;
}

// Exact division; throws when b does not divide a.
MPoly divide(MPoly a, const MPoly& b) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    MPoly q;
    const auto& [lb, cb] = *b.begin();
    while (!a.empty()) {
        const auto& [la, ca] = *a.begin();
        Exponents shift(la.size());
        for (std::size_t i = 0; i < la.size(); ++i) {
            shift[i] = la[i] - lb[i];
            if (shift[i] < 0) throw Error(ErrorKind::Construction, "inexact polynomial division");
        }
        const Rational c = ca / cb;
        q.emplace(shift, c);
        add_into(a, shift_mul(b, shift, c), Rational(-1));
    }
    return q;
}

int degree(const MPoly& p, std::size_t v) {
    int d = -1;
    for (const auto& [e, c] : p) d = std::max(d, e[v]);
    return d;
}

std::map<int, MPoly> coefficients(const MPoly& p, std::size_t v) {
    std::map<int, MPoly> out;
    for (const auto& [e, c] : p) {
        Exponents r = e;
        r[v] = 0;
        out[e[v]].emplace(std::move(r), c);
    }
    return out;
}

MPoly monic(const MPoly& p) {
    if (p.empty()) return p;
    MPoly out = p;
    const Rational inv = 1 / p.begin()->second;
    for (auto& [e, c] : out) c *= inv;
    return out;
}

MPoly gcd(const MPoly& a, const MPoly& b, std::size_t n);

MPoly content(const MPoly& p, std::size_t v, std::size_t n) {
    MPoly g;
    for (const auto& [d, c] : coefficients(p, v)) {
        g = g.empty() ? monic(c) : gcd(g, c, n);
        if (is_const(g)) return constant(1, n);
    }
    return g;
}

MPoly pseudo_remainder(MPoly r, const MPoly& b, std::size_t v) {
    const int db = degree(b, v);
    const MPoly lcb = coefficients(b, v).at(db);
    while (!r.empty()) {
        const int dr = degree(r, v);
        if (dr < db) break;
        const MPoly lcr = coefficients(r, v).at(dr);
        Exponents shift(nvars(b), 0);
        shift[v] = dr - db;
        MPoly next = mul(lcb, r);
        add_into(next, mul(lcr, shift_mul(b, shift, Rational(1))), Rational(-1));
        r = std::move(next);
    }
    return r;
}

std::size_t main_variable(const MPoly& a, const MPoly& b, std::size_t n) {
    for (std::size_t v = 0; v < n; ++v)
        if (degree(a, v) > 0 || degree(b, v) > 0) return v;
    return n;
}

MPoly gcd(const MPoly& a, const MPoly& b, std::size_t n) {
    if (a.empty()) return monic(b);
    if (b.empty()) return monic(a);
    if (is_const(a) || is_const(b)) return constant(1, n);
    if (a.size() == 1 && b.size() == 1) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = std::min(a.begin()->first[i], b.begin()->first[i]);
        MPoly out;
        out.emplace(std::move(e), Rational(1));
        return out;
    }
    const std::size_t v = main_variable(a, b, n);
    if (degree(a, v) <= 0) return gcd(a, content(b, v, n), n);
    if (degree(b, v) <= 0) return gcd(content(a, v, n), b, n);
    const MPoly ca = content(a, v, n);
    const MPoly cb = content(b, v, n);
    MPoly pa = divide(a, ca);
    MPoly pb = divide(b, cb);
    const MPoly c = gcd(ca, cb, n);
    if (degree(pa, v) < degree(pb, v)) std::swap(pa, pb);
    while (!pb.empty()) {
        MPoly r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        if (r.empty()) break;
        if (degree(r, v) <= 0) {
            pa = constant(1, n);
            break;
        }
        pb = divide(r, content(r, v, n));
    }
    if (!is_const(pa)) pa = divide(pa, content(pa, v, n));
    return monic(mul(c, pa));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    AtomIndex idx;
    idx.add(a);
    idx.add(b);
    idx.finalize();
    const std::size_t n = idx.size();
    return idx.to_poly(gcd(idx.to_mpoly(a), idx.to_mpoly(b), n));
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    AtomIndex idx;
    idx.add(a);
    idx.add(b);
    idx.finalize();
    return idx.to_poly(divide(idx.to_mpoly(a), idx.to_mpoly(b)));
}

}  // namespace lieinv::detail
