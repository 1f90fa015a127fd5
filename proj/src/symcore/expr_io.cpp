#include "lieinv/detail/expr_node.hpp"
#include "lieinv/errors.hpp"

#include <cctype>
#include <sstream>

namespace lieinv {

using namespace detail;

namespace {

std::string atom_text(const Atom& a) {
    if (a->kind == AtomKind::Symbol) return a->name;
    return "log(" + a->arg.to_string() + ")";
}

// Factors of a monomial joined by '*'; empty for the unit monomial.
std::string monomial_text(const Monomial& m, std::size_t* factors) {
    std::string out;
    std::size_t count = 0;
    for (const auto& [atom, k] : m.powers) {
        if (!out.empty()) out += '*';
        out += atom_text(atom);
        if (k != 1) out += '^' + std::to_string(k);
        ++count;
    }
    if (!m.exp_arg.is_zero()) {
        if (!out.empty()) out += '*';
        out += "exp(" + m.exp_arg.to_string() + ")";
        ++count;
    }
    if (factors != nullptr) *factors = count;
    return out;
}

std::string poly_text(const Poly& p, std::size_t* factors) {
    if (p.empty()) return "0";
    std::string out;
    std::size_t last_factors = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Term& t = p[i];
        Rational mag = abs(t.coeff);
        const bool negative = t.coeff < 0;
        if (i == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::size_t f = 0;
        const std::string mono = monomial_text(t.mono, &f);
        if (mono.empty()) {
            out += mag.get_str();
            f = 1;
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
            ++f;
        }
        last_factors = f + (negative ? 1 : 0);
    }
    if (factors != nullptr) *factors = p.size() == 1 ? last_factors : 2;
    return out;
}

}  // namespace

std::string Expr::to_string() const {
    const auto& n = node();
    if (poly_is_constant(n.den)) return poly_text(n.num, nullptr);
    std::string num = poly_text(n.num, nullptr);
    if (n.num.size() > 1) num = "(" + num + ")";
    std::size_t den_factors = 0;
    std::string den = poly_text(n.den, &den_factors);
    if (n.den.size() > 1 || den_factors > 1) den = "(" + den + ")";
    return num + "/" + den;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expression() {
        Expr e = term();
        for (;;) {
            if (accept('+')) {
                e = e + term();
            } else if (accept('-')) {
                e = e - term();
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            skip();
            if (pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') return e;
            if (accept('*')) {
                e = e * unary();
            } else if (accept('/')) {
                e = e / unary();
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        skip();
        bool caret = accept('^');
        if (!caret && pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') {
            pos_ += 2;
            caret = true;
        }
        if (!caret) return base;
        const Expr ex = unary();
        auto q = ex.as_rational();
        if (!q || q->get_den() != 1 || !q->get_num().fits_sint_p())
            fail("exponent must be an integer constant");
        return lieinv::pow(base, static_cast<int>(q->get_num().get_si()));
    }

    Expr number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        std::string frac;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            const std::size_t f = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            frac = std::string(text_.substr(f, pos_ - f));
        }
        if (digits.empty() && frac.empty()) fail("malformed number");
        mpz_class whole(digits.empty() ? "0" : digits);
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class numer = whole * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        Rational q(numer, scale);
        q.canonicalize();
        return Expr(q);
    }

    Expr primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (accept('(')) {
            Expr e = expression();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (accept('(')) {
                Expr arg = expression();
                if (!accept(')')) fail("expected ')'");
                if (name == "exp") return lieinv::exp(arg);
                if (name == "log" || name == "ln") return lieinv::log(arg);
                fail("unknown function '" + name + "'");
            }
            return Expr::symbol(std::move(name));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace lieinv
