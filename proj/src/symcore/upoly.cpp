#include "lieinv/upoly.hpp"

#include "lieinv/errors.hpp"

#include <algorithm>

namespace lieinv {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> out = c_;
    const Rational inv = 1 / c_.back();
    for (auto& x : out) x *= inv;
    return UPoly(std::move(out));
}

std::string UPoly::to_string(const std::string& var) const {
    Expr t = Expr::symbol(var);
    Expr e;
    for (int i = degree(); i >= 0; --i) e += Expr(coeff(i)) * pow(t, i);
    return e.to_string();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (i < a.c_.size() ? a.c_[i] : 0) - (i < b.c_.size() ? b.c_[i] : 0);
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> r(static_cast<std::size_t>(a.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) r[static_cast<std::size_t>(i)] = a.coeff(i);
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational f = r[static_cast<std::size_t>(k + db)] / b.leading();
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    if (n > mpz_class("1000000000000"))
        throw Error(ErrorKind::Resource, "coefficient too large for rational root search");
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

RootSplit rational_roots(const UPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::Domain, "roots of the zero polynomial");
    RootSplit out;
    UPoly rest = p.monic();
    auto strip = [&rest, &out](const Rational& r) {
        int m = 0;
        const UPoly lin({-r, Rational(1)});
        while (rest.degree() > 0 && rest.evaluate(r) == 0) {
            rest = divmod(rest, lin).first;
            ++m;
        }
        if (m > 0) out.roots.emplace_back(r, m);
    };
    strip(Rational(0));
    if (rest.degree() > 0) {
        // Integer coefficients for the rational root theorem.
        mpz_class lcm = 1;
        for (int i = 0; i <= rest.degree(); ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rest.coeff(i).get_den_mpz_t());
        const mpz_class a0 = Rational(rest.coeff(0) * lcm).get_num();
        const mpz_class an = Rational(rest.leading() * lcm).get_num();
        std::vector<Rational> candidates;
        for (const auto& num : divisors(a0))
            for (const auto& den : divisors(an)) {
                Rational q(num, den);
                q.canonicalize();
                candidates.push_back(q);
                candidates.push_back(-q);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            if (rest.degree() <= 0) break;
            strip(c);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.rest = rest;
    return out;
}

}  // namespace lieinv
