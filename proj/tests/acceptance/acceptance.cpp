// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "lieinv/cli.hpp"
#include "lieinv/darboux.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/extension.hpp"
#include "lieinv/legendre.hpp"
#include "lieinv/problem.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lieinv;

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr double kRuntimeLimitSeconds = 60.0;
constexpr int kDependencePoints = 5;
constexpr int kOracleProbes = 100;
constexpr double kOracleTolerance = 1e-9;
constexpr int kDerivativePoints = 20;
constexpr double kDerivativeRelTolerance = 1e-6;

std::string data(const std::string& name) { return std::string(LIEINV_DATA_DIR) + "/" + name + ".json"; }

Expr P(const char* s) { return parse_expr(s); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

bool report(int number, const char* title, const std::function<Outcome()>& body) {
    Outcome outcome;
    try {
        outcome = body();
    } catch (const Error& e) {
        outcome.pass = false;
        outcome.notes.push_back(std::string("error") + (e.stage().empty() ? "" : " in " + e.stage()) + " [" +
                                to_string(e.kind()) + "]: " + e.what());
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.notes.push_back(e.what());
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
    if (!outcome.notes.empty()) {
        std::cout << " (";
        for (std::size_t i = 0; i < outcome.notes.size(); ++i) std::cout << (i ? "; " : "") << outcome.notes[i];
        std::cout << ')';
    }
    std::cout << std::endl;
    return outcome.pass;
}

bool all_dependent(const ExprVector& basis, const ExprVector& wanted, const std::vector<std::string>& coords) {
    for (const auto& w : wanted)
        if (!functionally_dependent(basis, w, coords, kSeed, kDependencePoints)) return false;
    return true;
}

bool equivalent(const ExprVector& got, const ExprVector& wanted, const std::vector<std::string>& coords) {
    return got.size() == wanted.size() && all_dependent(got, wanted, coords) && all_dependent(wanted, got, coords);
}

bool annihilated(const std::vector<VectorField>& fields, const Expr& f) {
    return verify_invariant(fields, f).kind == VerdictKind::Symbolic;
}

ParamCovector reference_covector() {
    ExprVector v;
    for (const char* s : {"0", "j1", "j2", "0", "j3", "j4", "1", "0"}) v.push_back(P(s));
    return {v, {"j1", "j2", "j3", "j4"}};
}

Outcome worked_end_to_end() {
    Outcome o;
    const Problem p = load_problem(data("worked"));
    const auto start = std::chrono::steady_clock::now();
    const InvariantSet set = rep_invariants(p.algebra, *p.representation);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto x = coordinate_names("x", 4);
    const auto fields = generators(*p.representation, x);
    const ExprVector reference{P("x2/x3"), P("x1/x3 - x2/x3*log(x3)")};
    o.require(set.invariants.size() == 2, std::to_string(set.invariants.size()) + " invariants returned");
    for (const auto& j : reference) {
        o.require(annihilated(fields, j), j.to_string() + " not annihilated");
        o.require(functionally_dependent(set.invariants, j, x, kSeed, kDependencePoints),
                  j.to_string() + " not dependent on the result");
    }
    o.require(seconds < kRuntimeLimitSeconds, "took " + std::to_string(seconds) + " s");
    return o;
}

Outcome worked_stages() {
    Outcome o;
    const Problem p = load_problem(data("worked"));
    const LieAlgebra ext = extend(p.algebra, *p.representation).result;
    // [e_a, e_b] = sum of listed basis vectors with coefficients.
    LieAlgebra reference(8);
    for (const auto& [a, b, terms] : std::vector<std::tuple<int, int, std::vector<std::pair<int, int>>>>{
             {1, 4, {{1, 1}, {2, 1}}}, {1, 8, {{5, 1}, {6, 1}}}, {2, 4, {{2, 1}}}, {2, 8, {{6, 1}}},
             {3, 4, {{3, 1}}},         {3, 8, {{7, 1}}},         {4, 5, {{5, -1}, {6, -1}}},
             {4, 6, {{6, -1}}},        {4, 7, {{7, -1}}}})
        for (const auto& [k, c] : terms) reference.set_constant(a - 1, b - 1, k - 1, Expr(c));
    bool brackets_match = true;
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            for (std::size_t k = 0; k < 8; ++k) brackets_match = brackets_match && ext.constant(a, b, k) == reference.constant(a, b, k);
    o.require(brackets_match, "extended brackets differ from the reference table");

    const ParamCovector lambda = reference_covector();
    const auto ann = annihilator(ext, lambda);
    o.require(ann.dim() == 4, "annihilator dimension " + std::to_string(ann.dim()));
    const auto pol = polarization(ext, lambda);
    o.require(pol.dim() == 6, "polarization dimension " + std::to_string(pol.dim()));

    PipelineOptions options;
    options.covector = lambda;
    const InvariantSet set = casimirs(ext, options);
    const auto X = coordinate_names("X", 8);
    const ExprVector reference_casimirs{
        P("(X2*X5 - X1*X6 + X2*X6)/(X5*X7 + X6*X7*(1 - log(X7)))"),
        P("X3/X7 - (X1 - X2*log(X7))/(X5 + X6*(1 - log(X7)))"),
        P("X5/X7 - X6/X7*log(X7)"),
        P("X6/X7"),
    };
    o.require(set.invariants.size() == 4, std::to_string(set.invariants.size()) + " Casimirs");
    for (const auto& c : reference_casimirs)
        o.require(functionally_dependent(set.invariants, c, X, kSeed, kDependencePoints),
                  c.to_string() + " not reproduced");
    return o;
}

Outcome rotation_example() {
    Outcome o;
    const Problem p = load_problem(data("rotation"));
    const auto x = coordinate_names("x", 4);
    const auto X = coordinate_names("X", 4);
    const InvariantSet rep = rep_invariants(p.algebra, *p.representation);
    o.require(equivalent(rep.invariants, {P("x2^2 + x3^2 - 2*x1*x4"), P("x4")}, x),
              "representation invariants not equivalent to the reference pair");
    const ConjugateResult conj = conjugate_invariants(p.algebra, *p.representation);
    o.require(equivalent(conj.invariants.invariants, {P("X2^2 + X3^2 - 2*X1*X4"), P("X1")}, X),
              "conjugate invariants not equivalent to the reference pair");
    o.require(conj.involution, "double Legendre transform differs from the sheaf");
    return o;
}

Outcome property_suite() {
    Outcome o;
    const Problem worked = load_problem(data("worked"));
    const Problem rotation = load_problem(data("rotation"));
    std::vector<std::pair<std::string, LieAlgebra>> catalog;
    for (const char* name : {"abelian1", "abelian2", "abelian3", "heisenberg"})
        catalog.emplace_back(name, load_problem(data(name)).algebra);
    catalog.emplace_back("worked base", worked.algebra);
    catalog.emplace_back("rotation base", rotation.algebra);
    catalog.emplace_back("worked extended", extend(worked.algebra, *worked.representation).result);

    for (const auto& [name, L] : catalog) {
        try {
            const ParamCovector lambda = parametrize_covector(L, kSeed);
            const Subspace pol = polarization(L, lambda);
            o.require(check_polarization(L, lambda, pol).ok(), name + ": polarization checks fail");
            const TransitionSet ts = transition_functions(L, complete_basis(L, pol), lambda);
            o.require(transition_violations(L, ts).empty(), name + ": transition bracket identity fails");
            const InvariantSet set = casimirs(L);
            o.require(set.invariants.size() == index(L, kSeed),
                      name + ": " + std::to_string(set.invariants.size()) + " Casimirs, index " +
                          std::to_string(index(L, kSeed)));
        } catch (const Error& e) {
            o.require(false, name + ": " + to_string(e.kind()) + " (" + e.what() + ")");
        }
    }
    for (const Problem* p : {&worked, &rotation}) {
        const InvariantSet set = rep_invariants(p->algebra, *p->representation);
        if (set.status == InvariantStatus::Complete)
            o.require(set.invariants.size() == invariant_count(*p->representation, kSeed),
                      p->name + ": invariant count mismatch");
    }
    return o;
}

struct Golden {
    std::vector<VectorField> fields;
    InvariantSet set;
};

std::vector<Golden> golden_outputs() {
    std::vector<Golden> out;
    for (const char* name : {"abelian3", "heisenberg", "sl2"}) {
        const Problem p = load_problem(data(name));
        PipelineOptions options;
        options.hints = p.hints;
        out.push_back({generators(coadjoint(p.algebra), coordinate_names("X", p.algebra.dim())), casimirs(p.algebra, options)});
    }
    const Problem ext = load_problem(data("worked-extended"));
    PipelineOptions options;
    options.covector = ext.covector;
    out.push_back({generators(coadjoint(ext.algebra), coordinate_names("X", 8)), casimirs(ext.algebra, options)});
    for (const char* name : {"worked", "rotation"}) {
        const Problem p = load_problem(data(name));
        out.push_back({generators(*p.representation, coordinate_names("x", 4)), rep_invariants(p.algebra, *p.representation)});
    }
    const Problem rot = load_problem(data("rotation"));
    out.push_back({generators(dual_representation(*rot.representation), coordinate_names("X", 4)),
                   conjugate_invariants(rot.algebra, *rot.representation).invariants});
    return out;
}

Outcome oracle_closure() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& g : golden_outputs()) {
        const auto& coords = g.set.coords;
        for (const auto& j : g.set.invariants) {
            ExprVector applied;
            for (const auto& f : g.fields) applied.push_back(f.apply(j));
            int probes = 0;
            double worst = 0;
            for (int i = 0; probes < kOracleProbes && i < 4 * kOracleProbes; ++i) {
                try {
                    const NumericPoint point = probe_point(coords, kSeed + 1, i);
                    double here = 0;
                    for (const auto& a : applied) here = std::max(here, std::abs(eval_numeric(a, point)));
                    worst = std::max(worst, here);
                    ++probes;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::Domain && e.kind() != ErrorKind::DivisionByZero) throw;
                }
            }
            o.require(probes == kOracleProbes, j.to_string() + ": only " + std::to_string(probes) + " chart points");
            o.require(worst < kOracleTolerance, j.to_string() + ": residual " + std::to_string(worst));

            for (const auto& c : coords) {
                const Expr d = differentiate(j, c);
                int points = 0;
                for (int i = 0; points < kDerivativePoints && i < 4 * kDerivativePoints; ++i) {
                    try {
                        NumericPoint point = probe_point(coords, kSeed + 2, i);
                        const double x0 = point[c];
                        const double h = 1e-5 * std::max(1.0, std::abs(x0));
                        point[c] = x0 + h;
                        const double up = eval_numeric(j, point);
                        point[c] = x0 - h;
                        const double down = eval_numeric(j, point);
                        point[c] = x0;
                        const double exact = eval_numeric(d, point);
                        const double fd = (up - down) / (2 * h);
                        const double rel = std::abs(fd - exact) / std::max(1.0, std::abs(exact));
                        o.require(rel < kDerivativeRelTolerance,
                                  "d/d" + c + " of " + j.to_string() + ": relative error " + std::to_string(rel));
                        ++points;
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::Domain && e.kind() != ErrorKind::DivisionByZero) throw;
                    }
                }
                o.require(points == kDerivativePoints, j.to_string() + ": too few derivative points");
            }
            ++checked;
        }
    }
    o.require(checked > 0, "no invariants checked");
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::pair<const char*, std::vector<const char*>>> runs{
        {"abelian1", {"casimirs"}},
        {"abelian2", {"casimirs"}},
        {"abelian3", {"casimirs"}},
        {"heisenberg", {"casimirs"}},
        {"sl2", {"casimirs"}},
        {"sl2-heisenberg", {"casimirs"}},
        {"worked-extended", {"casimirs"}},
        {"worked", {"validate", "index", "rep-invariants", "conjugate-invariants"}},
        {"rotation", {"validate", "index", "casimirs", "rep-invariants", "conjugate-invariants"}},
    };
    for (const auto& [name, commands] : runs) {
        for (const char* command : commands) {
            std::string first;
            for (int run = 0; run < 2; ++run) {
                std::ostringstream out, err;
                run_cli({command, data(name), "--format", "json", "--seed", "20240917"}, out, err);
                if (run == 0) first = out.str();
                else o.require(out.str() == first, std::string(command) + " " + name + " differs between runs");
            }
            o.require(!first.empty(), std::string(command) + " " + name + " wrote nothing");
        }
    }
    return o;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= report(1, "worked example end to end", worked_end_to_end);
    ok &= report(2, "worked example intermediate stages", worked_stages);
    ok &= report(3, "rotation example and Legendre path", rotation_example);
    ok &= report(4, "property suite over the catalog", property_suite);
    ok &= report(5, "oracle closure", oracle_closure);
    ok &= report(6, "determinism", determinism);
    return ok ? 0 : 1;
}
