#include "lieinv/detail/expr_node.hpp"
#include "lieinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace lieinv {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Resource: return "resource";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::UnboundVariable: return "unbound-variable";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::Decidability: return "pivot-decidability";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::NotSolvable: return "not-solvable";
        case ErrorKind::UnsupportedField: return "unsupported-field";
        case ErrorKind::PolarizationNotFound: return "polarization-not-found";
        case ErrorKind::DegenerateCovector: return "degenerate-covector";
        case ErrorKind::ParametrizationExhausted: return "parametrization-exhausted";
        case ErrorKind::Construction: return "internal-construction";
        case ErrorKind::EliminationFailed: return "elimination-failed";
        case ErrorKind::GradientInversion: return "gradient-inversion";
        case ErrorKind::DegenerateInvariant: return "degenerate-invariant";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

int compare_names(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && digit(a[i2])) ++i2;
            while (j2 < b.size() && digit(b[j2])) ++j2;
            auto da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
            while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
            while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
            if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
            if (int c = da.compare(db); c != 0) return c < 0 ? -1 : 1;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
        ++i;
        ++j;
    }
    if (a.size() - i != b.size() - j) return (a.size() - i) < (b.size() - j) ? -1 : 1;
    int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace detail {

Atom make_symbol_atom(std::string name) {
    return std::make_shared<const AtomNode>(AtomNode{AtomKind::Symbol, std::move(name), Expr()});
}

Atom make_log_atom(Expr arg) {
    return std::make_shared<const AtomNode>(AtomNode{AtomKind::Log, {}, std::move(arg)});
}

int compare_atoms(const Atom& a, const Atom& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind == AtomKind::Symbol ? -1 : 1;
    if (a->kind == AtomKind::Symbol) return compare_names(a->name, b->name);
    return Expr::compare(a->arg, b->arg);
}

int compare_monomials(const Monomial& a, const Monomial& b) {
    const std::size_t n = std::min(a.powers.size(), b.powers.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare_atoms(a.powers[i].first, b.powers[i].first);
        if (c < 0) return 1;
        if (c > 0) return -1;
        if (a.powers[i].second != b.powers[i].second)
            return a.powers[i].second > b.powers[i].second ? 1 : -1;
    }
    if (a.powers.size() != b.powers.size()) return a.powers.size() > b.powers.size() ? 1 : -1;
    const bool ea = !a.exp_arg.is_zero(), eb = !b.exp_arg.is_zero();
    if (ea != eb) return ea ? 1 : -1;
    if (!ea) return 0;
    return Expr::compare(a.exp_arg, b.exp_arg);
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.powers.reserve(a.powers.size() + b.powers.size());
    std::size_t i = 0, j = 0;
    while (i < a.powers.size() || j < b.powers.size()) {
        if (j == b.powers.size()) {
            out.powers.push_back(a.powers[i++]);
        } else if (i == a.powers.size()) {
            out.powers.push_back(b.powers[j++]);
        } else {
            int c = compare_atoms(a.powers[i].first, b.powers[j].first);
            if (c < 0) {
                out.powers.push_back(a.powers[i++]);
            } else if (c > 0) {
                out.powers.push_back(b.powers[j++]);
            } else {
                out.powers.emplace_back(a.powers[i].first, a.powers[i].second + b.powers[j].second);
                ++i;
                ++j;
            }
        }
    }
    if (a.exp_arg.is_zero()) {
        out.exp_arg = b.exp_arg;
    } else if (b.exp_arg.is_zero()) {
        out.exp_arg = a.exp_arg;
    } else {
        out.exp_arg = a.exp_arg + b.exp_arg;
    }
    return out;
}

Poly poly_constant(const Rational& c) {
    if (c == 0) return {};
    return {Term{Monomial{}, c}};
}

void poly_canonicalize(Poly& p) {
    std::sort(p.begin(), p.end(),
              [](const Term& x, const Term& y) { return compare_monomials(x.mono, y.mono) > 0; });
    Poly out;
    out.reserve(p.size());
    for (auto& t : p) {
        if (!out.empty() && compare_monomials(out.back().mono, t.mono) == 0) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    p = std::move(out);
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
        } else if (i == a.size()) {
            out.push_back(b[j++]);
        } else {
            int c = compare_monomials(a[i].mono, b[j].mono);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(b[j++]);
            } else {
                Rational s = a[i].coeff + b[j].coeff;
                if (s != 0) out.push_back(Term{a[i].mono, s});
                ++i;
                ++j;
            }
        }
    }
    return out;
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& t : out) t.coeff *= c;
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() * b.size() > kMaxTerms)
        throw Error(ErrorKind::Resource, "expression size limit exceeded in product");
    if (a.size() == 1 && a[0].mono.is_one()) return poly_scale(b, a[0].coeff);
    if (b.size() == 1 && b[0].mono.is_one()) return poly_scale(a, b[0].coeff);
    Poly out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(Term{multiply(x.mono, y.mono), x.coeff * y.coeff});
    poly_canonicalize(out);
    return out;
}

bool poly_is_constant(const Poly& p) {
    return p.empty() || (p.size() == 1 && p[0].mono.is_one());
}

bool poly_has_exp(const Poly& p) {
    return std::any_of(p.begin(), p.end(), [](const Term& t) { return !t.mono.exp_arg.is_zero(); });
}

namespace {

bool is_integer(const Rational& q) { return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0; }

// A term n*log(u) with integer n; such terms leave exp arguments.
bool is_extractable_log_term(const Term& t) {
    return t.mono.exp_arg.is_zero() && t.mono.powers.size() == 1 && t.mono.powers[0].second == 1 &&
           t.mono.powers[0].first->kind == AtomKind::Log && is_integer(t.coeff);
}

bool exp_arg_clean(const Expr& e) {
    if (e.is_zero()) return true;
    const auto& n = e.node();
    if (!poly_is_constant(n.den)) return true;
    return std::none_of(n.num.begin(), n.num.end(), is_extractable_log_term);
}

bool poly_clean(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Term& t) { return exp_arg_clean(t.mono.exp_arg); });
}

void collect_symbols(const Poly& p, std::vector<std::string>& out, bool& transcendental) {
    for (const auto& t : p) {
        for (const auto& [atom, k] : t.mono.powers) {
            if (atom->kind == AtomKind::Symbol) {
                out.push_back(atom->name);
            } else {
                transcendental = true;
                const auto& s = atom->arg.free_symbols();
                out.insert(out.end(), s.begin(), s.end());
            }
        }
        if (!t.mono.exp_arg.is_zero()) {
            transcendental = true;
            const auto& s = t.mono.exp_arg.free_symbols();
            out.insert(out.end(), s.begin(), s.end());
        }
    }
}

std::shared_ptr<const ExprNode> finish(Poly num, Poly den) {
    auto node = std::make_shared<ExprNode>();
    node->num = std::move(num);
    node->den = std::move(den);
    collect_symbols(node->num, node->symbols, node->transcendental);
    collect_symbols(node->den, node->symbols, node->transcendental);
    std::sort(node->symbols.begin(), node->symbols.end(),
              [](const std::string& a, const std::string& b) { return compare_names(a, b) < 0; });
    node->symbols.erase(std::unique(node->symbols.begin(), node->symbols.end()), node->symbols.end());
    return node;
}

const std::shared_ptr<const ExprNode>& zero_node() {
    static const auto node = finish({}, poly_constant(1));
    return node;
}

void shift_exp(Poly& p, const Expr& shift) {
    for (auto& t : p) t.mono.exp_arg = t.mono.exp_arg + shift;
    poly_canonicalize(p);
}

Expr rebuild_clean(const Poly& p) {
    Expr sum;
    for (const auto& t : p) {
        Monomial atoms_only{t.mono.powers, Expr()};
        Expr term = make_expr(Poly{Term{atoms_only, t.coeff}}, poly_constant(1));
        if (!t.mono.exp_arg.is_zero()) term = term * lieinv::exp(t.mono.exp_arg);
        sum = sum + term;
    }
    return sum;
}

void divide_monomial_content(Poly& num, Poly& den) {
    std::vector<std::pair<Atom, int>> common = num[0].mono.powers;
    auto intersect = [&common](const Monomial& m) {
        std::vector<std::pair<Atom, int>> next;
        std::size_t i = 0, j = 0;
        while (i < common.size() && j < m.powers.size()) {
            int c = compare_atoms(common[i].first, m.powers[j].first);
            if (c < 0) {
                ++i;
            } else if (c > 0) {
                ++j;
            } else {
                next.emplace_back(common[i].first, std::min(common[i].second, m.powers[j].second));
                ++i;
                ++j;
            }
        }
        common = std::move(next);
    };
    for (const auto& t : num) {
        if (common.empty()) return;
        intersect(t.mono);
    }
    for (const auto& t : den) {
        if (common.empty()) return;
        intersect(t.mono);
    }
    if (common.empty()) return;
    auto strip = [&common](Poly& p) {
        for (auto& t : p) {
            std::vector<std::pair<Atom, int>> kept;
            std::size_t i = 0;
            for (const auto& [atom, k] : t.mono.powers) {
                while (i < common.size() && compare_atoms(common[i].first, atom) < 0) ++i;
                int rest = k;
                if (i < common.size() && compare_atoms(common[i].first, atom) == 0) rest -= common[i].second;
                if (rest > 0) kept.emplace_back(atom, rest);
            }
            t.mono.powers = std::move(kept);
        }
        // Dividing every term by the same monomial preserves the order.
    };
    strip(num);
    strip(den);
}

void cancel_gcd(Poly& num, Poly& den) {
    if (poly_is_constant(den) || den.size() < 2) return;
    Poly g = poly_gcd(num, den);
    if (poly_is_constant(g)) return;
    num = poly_exact_div(num, g);
    den = poly_exact_div(den, g);
}

}  // namespace

Expr make_expr(Poly num, Poly den) {
    if (num.empty()) return Expr();
    if (den.empty()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (num.size() > kMaxTerms || den.size() > kMaxTerms)
        throw Error(ErrorKind::Resource, "expression size limit exceeded");

    if (poly_has_exp(den)) {
        const Expr e0 = den[0].mono.exp_arg;
        bool common = !e0.is_zero() && std::all_of(den.begin(), den.end(), [&e0](const Term& t) {
            return t.mono.exp_arg == e0;
        });
        if (common) {
            const Expr shift = -e0;
            shift_exp(num, shift);
            shift_exp(den, shift);
        }
    }
    if (!poly_clean(num) || !poly_clean(den)) {
        Expr n = rebuild_clean(num);
        Expr d = rebuild_clean(den);
        return n / d;
    }
    divide_monomial_content(num, den);
    cancel_gcd(num, den);
    const Rational lc = den[0].coeff;
    if (lc != 1) {
        const Rational inv = 1 / lc;
        for (auto& t : num) t.coeff *= inv;
        for (auto& t : den) t.coeff *= inv;
    }
    return Expr(finish(std::move(num), std::move(den)));
}

Expr poly_expr(Poly p) { return make_expr(std::move(p), poly_constant(1)); }

Expr term_expr(const Term& t) { return make_expr(Poly{t}, poly_constant(1)); }

Expr monomial_expr(const Monomial& m) { return term_expr(Term{m, Rational(1)}); }

Expr atom_expr(const Atom& a) {
    return make_expr(Poly{Term{Monomial{{{a, 1}}, Expr()}, Rational(1)}}, poly_constant(1));
}

}  // namespace detail

using namespace detail;

Expr::Expr() = default;

const ExprNode& Expr::node() const { return node_ ? *node_ : *zero_node(); }

Expr::Expr(int value) : Expr(Rational(value)) {}

Expr::Expr(long value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) {
    if (value == 0) {
        node_ = nullptr;
    } else {
        Rational v = value;
        v.canonicalize();
        node_ = finish(poly_constant(v), poly_constant(1));
    }
}

Expr Expr::symbol(std::string name) {
    if (name.empty()) throw Error(ErrorKind::Parse, "empty symbol name");
    return atom_expr(make_symbol_atom(std::move(name)));
}

bool Expr::is_zero() const { return !node_ || node_->num.empty(); }

bool Expr::is_one() const {
    return node().num.size() == 1 && node().num[0].mono.is_one() && node().num[0].coeff == 1 &&
           poly_is_constant(node().den);
}

bool Expr::is_constant() const { return poly_is_constant(node().num) && poly_is_constant(node().den); }

bool Expr::is_polynomial() const { return poly_is_constant(node().den); }

std::optional<Rational> Expr::as_rational() const {
    if (!is_constant()) return std::nullopt;
    if (node().num.empty()) return Rational(0);
    return node().num[0].coeff / node().den[0].coeff;
}

std::optional<std::string> Expr::as_symbol() const {
    const auto& n = node();
    if (n.num.size() != 1 || n.num[0].coeff != 1 || !poly_is_constant(n.den)) return std::nullopt;
    const auto& m = n.num[0].mono;
    if (m.powers.size() != 1 || m.powers[0].second != 1 || !m.exp_arg.is_zero()) return std::nullopt;
    if (m.powers[0].first->kind != AtomKind::Symbol) return std::nullopt;
    return m.powers[0].first->name;
}

const std::vector<std::string>& Expr::free_symbols() const { return node().symbols; }

bool Expr::depends_on(std::string_view name) const {
    const auto& s = node().symbols;
    return std::binary_search(s.begin(), s.end(), name,
                              [](const auto& a, const auto& b) { return compare_names(a, b) < 0; });
}

bool Expr::is_transcendental() const { return node().transcendental; }

Expr Expr::numerator() const { return poly_expr(node().num); }

Expr Expr::denominator() const { return poly_expr(node().den); }

std::size_t Expr::term_count() const { return node().num.size() + node().den.size(); }

namespace {

int compare_polys(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare_monomials(a[i].mono, b[i].mono); c != 0) return c;
        if (int c = cmp(a[i].coeff, b[i].coeff); c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace

int Expr::compare(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_ || (a.is_zero() && b.is_zero())) return 0;
    if (int c = compare_polys(a.node().num, b.node().num); c != 0) return c;
    return compare_polys(a.node().den, b.node().den);
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& x = a.node();
    const auto& y = b.node();
    if (compare_polys(x.den, y.den) == 0) {
        if (poly_is_constant(x.den)) {
            // Sum of polynomials over a common constant denominator stays normal
            // unless cancellations leave a clean-up to do; route through make_expr.
            return make_expr(poly_add(x.num, y.num), x.den);
        }
        return make_expr(poly_add(x.num, y.num), x.den);
    }
    return make_expr(poly_add(poly_mul(x.num, y.den), poly_mul(y.num, x.den)), poly_mul(x.den, y.den));
}

Expr operator-(const Expr& a) {
    if (a.is_zero()) return a;
    const auto& x = a.node();
    return Expr(finish(poly_scale(x.num, Rational(-1)), x.den));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_zero() || b.is_zero()) return Expr();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    const auto& x = a.node();
    const auto& y = b.node();
    return make_expr(poly_mul(x.num, y.num), poly_mul(x.den, y.den));
}

Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (a.is_zero()) return a;
    if (b.is_one()) return a;
    const auto& x = a.node();
    const auto& y = b.node();
    return make_expr(poly_mul(x.num, y.den), poly_mul(x.den, y.num));
}

Expr pow(const Expr& base, int exponent) {
    if (exponent == 0) return Expr(1);
    if (exponent < 0) return Expr(1) / pow(base, -exponent);
    Expr result(1);
    Expr b = base;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U) result = result * b;
        e >>= 1U;
        if (e != 0) b = b * b;
    }
    return result;
}

Expr exp(const Expr& arg) {
    if (arg.is_zero()) return Expr(1);
    const auto& n = arg.node();
    Expr factor(1);
    Poly rest;
    if (poly_is_constant(n.den)) {
        for (const auto& t : n.num) {
            if (is_extractable_log_term(t)) {
                factor = factor * pow(t.mono.powers[0].first->arg, static_cast<int>(t.coeff.get_num().get_si()));
            } else {
                rest.push_back(t);
            }
        }
    } else {
        // Pull out log atoms whose coefficient in the quotient is an integer.
        for (const auto& t : n.num) {
            for (const auto& [atom, k] : t.mono.powers) {
                if (atom->kind != AtomKind::Log || k != 1) continue;
                Poly coeff;
                bool linear = true;
                for (const auto& s : n.num) {
                    Monomial reduced{{}, s.mono.exp_arg};
                    bool has = false;
                    for (const auto& pw : s.mono.powers) {
                        if (pw.first == atom) {
                            has = true;
                            if (pw.second != 1) linear = false;
                        } else {
                            reduced.powers.push_back(pw);
                        }
                    }
                    if (has) coeff.push_back(Term{std::move(reduced), s.coeff});
                }
                if (!linear) continue;
                const auto c = (poly_expr(std::move(coeff)) / poly_expr(n.den)).as_rational();
                if (!c || !is_integer(*c)) continue;
                const int m = static_cast<int>(c->get_num().get_si());
                return pow(atom->arg, m) * exp(arg - Expr(m) * atom_expr(atom));
            }
        }
        return make_expr(Poly{Term{Monomial{{}, arg}, Rational(1)}}, poly_constant(1));
    }
    if (rest.empty()) return factor;
    Expr rest_expr = rest.size() == n.num.size() ? arg : poly_expr(std::move(rest));
    return factor * make_expr(Poly{Term{Monomial{{}, rest_expr}, Rational(1)}}, poly_constant(1));
}

namespace {

Expr log_of_atom(const Atom& a) { return atom_expr(make_log_atom(atom_expr(a))); }

Expr log_positive_rational(const Rational& c) {
    if (c == 1) return Expr();
    return atom_expr(make_log_atom(Expr(c)));
}

Expr log_poly(const Poly& p) {
    if (poly_is_constant(p)) {
        const Rational c = p.empty() ? Rational(0) : p[0].coeff;
        if (c <= 0) return atom_expr(make_log_atom(Expr(c)));
        return log_positive_rational(c);
    }
    if (p.size() == 1) {
        const Term& t = p[0];
        if (t.coeff < 0) return atom_expr(make_log_atom(poly_expr(p)));
        Expr out = log_positive_rational(t.coeff);
        for (const auto& [atom, k] : t.mono.powers) out = out + Expr(k) * log_of_atom(atom);
        if (!t.mono.exp_arg.is_zero()) out = out + t.mono.exp_arg;
        return out;
    }
    const Rational lc = p[0].coeff;
    if (lc < 0) return atom_expr(make_log_atom(poly_expr(p)));
    return log_positive_rational(lc) + atom_expr(make_log_atom(poly_expr(poly_scale(p, 1 / lc))));
}

}  // namespace

Expr log(const Expr& arg) {
    if (arg.is_zero()) throw Error(ErrorKind::Domain, "log of zero");
    if (arg.is_one()) return Expr();
    const auto& n = arg.node();
    return log_poly(n.num) - log_poly(n.den);
}

Expr sign_part(const Expr& e) {
    if (e.is_zero()) return e;
    const auto& n = e.node();
    if (n.num.size() != 1 || n.den.size() != 1) return e;
    auto strip = [](const Term& t) {
        return monomial_expr(Monomial{t.mono.powers, Expr()}) * Expr(t.coeff < 0 ? Rational(-1) : Rational(1));
    };
    return strip(n.num[0]) / strip(n.den[0]);
}

namespace {

Expr diff_atom(const Atom& a, std::string_view var) {
    if (a->kind == AtomKind::Symbol) return a->name == var ? Expr(1) : Expr();
    if (!a->arg.depends_on(var)) return Expr();
    return differentiate(a->arg, var) / a->arg;
}

bool atom_depends(const Atom& a, std::string_view var) {
    if (a->kind == AtomKind::Symbol) return a->name == var;
    return a->arg.depends_on(var);
}

Expr diff_poly(const Poly& p, std::string_view var) {
    Expr total;
    for (const auto& t : p) {
        const auto& powers = t.mono.powers;
        const bool exp_dep = !t.mono.exp_arg.is_zero() && t.mono.exp_arg.depends_on(var);
        bool any = exp_dep;
        for (const auto& pw : powers) any = any || atom_depends(pw.first, var);
        if (!any) continue;
        Expr r;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (!atom_depends(powers[i].first, var)) continue;
            Monomial others{{}, Expr()};
            for (std::size_t j = 0; j < powers.size(); ++j) {
                int k = powers[j].second - (i == j ? 1 : 0);
                if (k > 0) others.powers.emplace_back(powers[j].first, k);
            }
            r = r + Expr(powers[i].second) * monomial_expr(others) * diff_atom(powers[i].first, var);
        }
        if (exp_dep) r = r + monomial_expr(Monomial{powers, Expr()}) * differentiate(t.mono.exp_arg, var);
        if (!t.mono.exp_arg.is_zero()) r = r * monomial_expr(Monomial{{}, t.mono.exp_arg});
        total = total + Expr(t.coeff) * r;
    }
    return total;
}

}  // namespace

Expr differentiate(const Expr& e, std::string_view var) {
    if (!e.depends_on(var)) return Expr();
    const auto& n = e.node();
    Expr dn = diff_poly(n.num, var);
    if (poly_is_constant(n.den)) return dn;
    Expr num = poly_expr(n.num);
    Expr den = poly_expr(n.den);
    Expr dd = diff_poly(n.den, var);
    return (dn * den - num * dd) / (den * den);
}

namespace {

bool touches(const Expr& e, const Bindings& b) {
    for (const auto& s : e.free_symbols())
        if (b.find(s) != b.end()) return true;
    return false;
}

Expr subst_poly(const Poly& p, const Bindings& b) {
    Expr total;
    for (const auto& t : p) {
        Expr term(t.coeff);
        for (const auto& [atom, k] : t.mono.powers) {
            Expr base;
            if (atom->kind == AtomKind::Symbol) {
                auto it = b.find(atom->name);
                base = it == b.end() ? atom_expr(atom) : it->second;
            } else {
                base = touches(atom->arg, b) ? lieinv::log(substitute(atom->arg, b)) : atom_expr(atom);
            }
            term = term * pow(base, k);
        }
        if (!t.mono.exp_arg.is_zero()) term = term * lieinv::exp(substitute(t.mono.exp_arg, b));
        total = total + term;
    }
    return total;
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
    if (!touches(e, bindings)) return e;
    const auto& n = e.node();
    Expr num = subst_poly(n.num, bindings);
    if (poly_is_constant(n.den)) return num / Expr(n.den[0].coeff);
    return num / subst_poly(n.den, bindings);
}

namespace detail {

double eval_atom(const Atom& a, const NumericPoint& point) {
    if (a->kind == AtomKind::Symbol) {
        auto it = point.find(a->name);
        if (it == point.end()) throw Error(ErrorKind::UnboundVariable, "unbound variable " + a->name);
        return it->second;
    }
    const double v = eval_numeric(a->arg, point);
    if (!(v > 0)) throw Error(ErrorKind::Domain, "log of non-positive value at " + a->arg.to_string());
    return std::log(v);
}

double eval_poly(const Poly& p, const NumericPoint& point, double* scale) {
    double sum = 0, mag = 0;
    for (const auto& t : p) {
        double v = t.coeff.get_d();
        for (const auto& [atom, k] : t.mono.powers) v *= std::pow(eval_atom(atom, point), k);
        if (!t.mono.exp_arg.is_zero()) v *= std::exp(eval_numeric(t.mono.exp_arg, point));
        sum += v;
        mag += std::fabs(v);
    }
    if (scale != nullptr) *scale = mag;
    return sum;
}

}  // namespace detail

double eval_numeric(const Expr& e, const NumericPoint& point) {
    const auto& n = e.node();
    const double num = eval_poly(n.num, point, nullptr);
    if (poly_is_constant(n.den)) return num / n.den[0].coeff.get_d();
    const double den = eval_poly(n.den, point, nullptr);
    if (den == 0 || !std::isfinite(den)) throw Error(ErrorKind::Domain, "denominator vanishes at point");
    return num / den;
}

}  // namespace lieinv
