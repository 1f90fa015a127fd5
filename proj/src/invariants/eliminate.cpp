#include "lieinv/errors.hpp"
#include "lieinv/invariants.hpp"

#include <algorithm>
#include <map>

namespace lieinv {

const char* to_string(InvariantStatus status) {
    switch (status) {
        case InvariantStatus::Complete: return "complete";
        case InvariantStatus::Partial: return "partial";
        case InvariantStatus::Implicit: return "implicit";
    }
    return "?";
}

namespace {

struct Solution {
    Expr value;
    std::optional<Expr> positive;  // log argument introduced by the step
};

// e = D*u + rest with D and rest free of u.
std::optional<Solution> solve_linear(const Expr& e, const std::string& u) {
    const Expr d = differentiate(e, u);
    if (d.is_zero() || d.depends_on(u)) return std::nullopt;
    const Expr rest = e - d * Expr::symbol(u);
    if (rest.depends_on(u)) return std::nullopt;
    return Solution{-rest / d, std::nullopt};
}

// e = H*exp(c*u) + B with H, B, c free of u.
std::optional<Solution> solve_exponential(const Expr& e, const std::string& u) {
    const Expr d = differentiate(e, u);
    if (d.is_zero()) return std::nullopt;
    const Expr c = differentiate(d, u) / d;
    if (c.is_zero() || c.depends_on(u)) return std::nullopt;
    const Expr g = d / c;
    const Expr b = e - g;
    if (b.depends_on(u) || b.is_zero()) return std::nullopt;
    const Expr h = g * exp(-c * Expr::symbol(u));
    if (h.depends_on(u)) return std::nullopt;
    const Expr arg = -b / h;
    return Solution{log(arg) / c, arg.is_constant() ? std::nullopt : std::optional<Expr>(arg)};
}

// e = A*log(u) + B with A, B free of u.
std::optional<Solution> solve_logarithmic(const Expr& e, const std::string& u) {
    const Expr var = Expr::symbol(u);
    const Expr a = var * differentiate(e, u);
    if (a.is_zero() || a.depends_on(u)) return std::nullopt;
    const Expr b = e - a * log(var);
    if (b.depends_on(u)) return std::nullopt;
    return Solution{exp(-b / a), var};
}

// e = A*P(u) + B with P a polynomial without constant term and A, B free of
// u; yields P(u) = -B/A.
struct PowerStep {
    Expr power;  // P(u)
    Expr value;  // -B/A
};

constexpr int kMaxPowerDegree = 8;

std::optional<PowerStep> solve_power(const Expr& e, const std::string& u) {
    if (e.denominator().depends_on(u)) return std::nullopt;
    const Expr num = e.numerator();
    const Expr var = Expr::symbol(u);
    const Bindings at_zero{{u, Expr()}};
    ExprVector coeffs;
    Expr d = num;
    Rational factorial = 1;
    for (int k = 0; !d.is_zero(); ++k) {
        if (k > kMaxPowerDegree) return std::nullopt;
        if (k > 0) factorial *= k;
        coeffs.push_back(substitute(d, at_zero) / Expr(factorial));
        d = differentiate(d, u);
    }
    std::size_t lead = 0;
    for (std::size_t k = 1; k < coeffs.size() && lead == 0; ++k)
        if (!coeffs[k].is_zero()) lead = k;
    if (lead == 0 || coeffs[0].is_zero()) return std::nullopt;
    Expr power;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        const Expr ratio = coeffs[k] / coeffs[lead];
        if (!ratio.is_constant()) return std::nullopt;
        power += ratio * pow(var, static_cast<int>(k));
    }
    return PowerStep{power, -coeffs[0] / coeffs[lead]};
}

int kind_rank(const std::string& name, const TransitionSet& ts) {
    if (std::find(ts.p.begin(), ts.p.end(), name) != ts.p.end()) return 0;
    if (std::find(ts.q.begin(), ts.q.end(), name) != ts.q.end()) return 1;
    return 2;
}

}  // namespace

InvariantSet eliminate(const TransitionSet& ts, const std::vector<std::string>& coords) {
    if (coords.size() != ts.dim) throw Error(ErrorKind::DimensionMismatch, "one coordinate per transition function");
    InvariantSet out;
    out.coords = coords;

    std::vector<std::string> unknowns = ts.p;
    unknowns.insert(unknowns.end(), ts.q.begin(), ts.q.end());
    unknowns.insert(unknowns.end(), ts.params.begin(), ts.params.end());

    ExprVector equations;
    for (std::size_t i = 0; i < ts.dim; ++i) equations.push_back(Expr::symbol(coords[i]) - ts.functions[i]);

    Bindings solved;
    std::map<std::string, PowerStep> powered;
    for (;;) {
        // Candidate equations by number of unknowns, then position.
        std::vector<std::pair<std::size_t, std::size_t>> order;
        for (std::size_t i = 0; i < equations.size(); ++i) {
            std::size_t count = 0;
            for (const auto& u : unknowns)
                if (!solved.count(u) && equations[i].depends_on(u)) ++count;
            if (count > 0) order.emplace_back(count, i);
        }
        if (order.empty()) break;
        std::sort(order.begin(), order.end());

        // Canonical variables first, across all equations, then parameters.
        bool progressed = false;
        for (int kind = 0; kind < 3 && !progressed; ++kind) {
            for (const auto& [count, i] : order) {
                for (const auto& u : unknowns) {
                    if (solved.count(u) || kind_rank(u, ts) != kind || !equations[i].depends_on(u)) continue;
                    auto s = solve_linear(equations[i], u);
                    if (!s) s = solve_exponential(equations[i], u);
                    if (!s) s = solve_logarithmic(equations[i], u);
                    if (!s) continue;
                    if (s->positive) out.chart.push_back(*s->positive);
                    const Bindings step{{u, s->value}};
                    for (auto& eq : equations) eq = substitute(eq, step).numerator();
                    for (auto& [name, value] : solved) value = substitute(value, step);
                    for (auto& c : out.chart) c = substitute(c, step);
                    solved[u] = s->value;
                    progressed = true;
                    break;
                }
                if (progressed) break;
            }
        }
        if (!progressed) {
            // A parameter left alone in an equation may still be fixed up to
            // a polynomial function of itself.
            for (const auto& [count, i] : order) {
                if (count != 1) continue;
                for (const auto& j : ts.params) {
                    if (solved.count(j) || powered.count(j) || !equations[i].depends_on(j)) continue;
                    if (auto step = solve_power(equations[i], j)) {
                        powered.emplace(j, *step);
                        equations[i] = Expr();
                        progressed = true;
                    }
                    break;
                }
                if (progressed) break;
            }
        }
        if (!progressed) break;
    }

    auto explicit_value = [&](const Expr& e) {
        for (const auto& u : unknowns)
            if (e.depends_on(u)) return false;
        return true;
    };

    Bindings back;
    for (std::size_t i = 0; i < ts.dim; ++i) back[coords[i]] = ts.functions[i];
    std::vector<std::string> missing;
    for (const auto& j : ts.params) {
        Expr value, target;
        if (solved.count(j) && explicit_value(solved[j])) {
            value = solved[j];
            target = Expr::symbol(j);
        } else if (powered.count(j) && explicit_value(powered.at(j).value)) {
            value = powered.at(j).value;
            target = powered.at(j).power;
        } else {
            missing.push_back(j);
            continue;
        }
        // Round trip through the transition functions.
        if (test_zero(substitute(value, back) - target).verdict == ZeroVerdict::NonZero) {
            out.status = InvariantStatus::Partial;
            out.diagnostic = "round trip fails for " + j;
        }
        out.invariants.push_back(value);
    }
    for (auto& c : out.chart) c = sign_part(c);
    std::erase_if(out.chart, [&](const Expr& c) { return !explicit_value(c) || c.is_one(); });
    std::sort(out.chart.begin(), out.chart.end());
    out.chart.erase(std::unique(out.chart.begin(), out.chart.end()), out.chart.end());
    if (!missing.empty()) {
        out.status = InvariantStatus::Implicit;
        for (const auto& eq : equations)
            if (!eq.is_zero()) out.implicit.push_back(eq);
        out.diagnostic = "no triangular step determines " + missing.front();
    }
    return out;
}

}  // namespace lieinv
